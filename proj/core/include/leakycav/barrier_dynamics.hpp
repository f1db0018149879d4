#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "leakycav/grid.hpp"
#include "leakycav/pml.hpp"
#include "leakycav/potential.hpp"
#include "leakycav/wave_state.hpp"

namespace leakycav {

// Time stepper for i hbar dpsi/dt = H psi with
//   H = -(hbar^2/2m) (1/s) d/dx (1/s) d/dx + V(x),
// s(x) the PML stretch. The Hermitian part advances with the staggered
// leapfrog (re at integer steps, im at half steps); the anti-Hermitian PML
// part is folded in through an implicit solve confined to the layers, since
// a plain leapfrog treatment of damping excites the growing parasitic root.
class BarrierEvolver {
public:
    BarrierEvolver(const Grid1D& grid, const PotentialProfile& potential,
                   const PmlSpec& pml, double mass, double hbar, double dt);

    // dt <= 0.1 * hbar / (hbar^2/(m dx^2) + max|V|)
    static double stable_dt(const Grid1D& grid, const PotentialProfile& potential,
                            double mass = 1.0, double hbar = 1.0);

    void step(WaveState& state) const;
    void advance(WaveState& state, std::size_t n_steps) const;

    double dt() const { return dt_; }
    const Grid1D& grid() const { return grid_; }

private:
    void bootstrap(WaveState& state) const;
    void apply_hermitian(const std::vector<double>& in, std::vector<double>& out) const;
    void damp(std::vector<double>& v) const;
    void check_finite(const WaveState& state) const;

    Grid1D grid_;
    double mass_, hbar_, dt_;
    // Hermitian part (tridiagonal, real).
    std::vector<double> a_sub_, a_diag_, a_sup_;
    // Anti-Hermitian PML part (tridiagonal, real, supported near the edges).
    std::vector<double> b_sub_, b_diag_, b_sup_;
    struct Block { std::size_t lo, hi; };
    std::vector<Block> damp_blocks_;
    // Prefactored Thomas data for (I - dt/hbar * B) on each block.
    std::vector<double> thomas_diag_, thomas_sub_, thomas_sup_;
    mutable std::vector<double> scratch_;
};

// One-shot functional step (builds an evolver, advances a copy by dt).
WaveState step(const WaveState& state, const PotentialProfile& potential,
               const PmlSpec& pml, double dt);

// --- escape diagnostics -----------------------------------------------------

// integral of |psi|^2 over [-l, l]
double nonescape_probability(const WaveState& state, double l);

// j(x) = (hbar/2mi)(psi* dpsi/dx - psi dpsi*/dx), centered differences
double probability_current(const WaveState& state, double x);

// Gamma = [j(l+w) - j(-l-w)] / integral_{-l-w}^{l+w} |psi|^2
double decay_rate_from_flux(const WaveState& state, double l, double w);

// Gamma = hbar k / (2m(l+w)) * (|A+|^2 + |A-|^2) / <|phi|^2>_within
double decay_rate_formula(std::complex<double> a_plus, std::complex<double> a_minus,
                          double k, double l, double w, double mean_sq_phi,
                          double mass = 1.0, double hbar = 1.0);

// v = j(x)/|psi(x)|^2
double bohmian_velocity(const WaveState& state, double x);

// --- exponential-regime fit -------------------------------------------------

struct DecayFit {
    double gamma = 0.0;
    double r_squared = 0.0;
    std::size_t first = 0, last = 0; // sample window used
};

// Fits log p(t) over the trailing window in which the local slope varies by
// less than slope_tol; rejects fits with R^2 below r2_min.
DecayFit fit_decay_rate(std::span<const double> t, std::span<const double> p,
                        double slope_tol = 0.01, double r2_min = 0.999);

// --- time-series emission ---------------------------------------------------

struct EscapeTimeSeries {
    std::vector<double> t, p_nonesc, norm_total, flux_right, flux_left, gamma_flux;

    void record(const WaveState& state, double l, double w);
    // CSV columns: t,P_nonesc,norm_total,flux_right,flux_left,gamma_flux
    void write_csv(const std::string& path) const;
};

} // namespace leakycav
