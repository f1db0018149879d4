#include "leakycav/barrier_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "leakycav/csv.hpp"
#include "leakycav/errors.hpp"
#include "leakycav/numerics.hpp"

namespace leakycav {

void PmlSpec::validate() const {
    if (thickness < 0.0) throw validation_error("PmlSpec: thickness must be >= 0");
    if (strength < 0.0) throw validation_error("PmlSpec: strength must be >= 0");
    if (exponent != 2 && exponent != 3)
        throw validation_error("PmlSpec: exponent must be 2 or 3");
    if (enabled() && !(reference_k > 0.0))
        throw validation_error("PmlSpec: reference_k must be positive");
}

std::complex<double> PmlSpec::stretch(double x, double x_min, double x_max) const {
    if (!enabled()) return {1.0, 0.0};
    double depth = 0.0;
    if (x > x_max - thickness) depth = (x - (x_max - thickness)) / thickness;
    else if (x < x_min + thickness) depth = ((x_min + thickness) - x) / thickness;
    if (depth <= 0.0) return {1.0, 0.0};
    double sigma = strength * std::pow(depth, exponent);
    return {1.0, sigma / reference_k};
}

double BarrierEvolver::stable_dt(const Grid1D& grid, const PotentialProfile& potential,
                                 double mass, double hbar) {
    double kinetic = hbar * hbar / (mass * grid.dx * grid.dx);
    return 0.1 * hbar / (kinetic + potential.max_abs());
}

BarrierEvolver::BarrierEvolver(const Grid1D& grid, const PotentialProfile& potential,
                               const PmlSpec& pml, double mass, double hbar, double dt)
    : grid_(grid), mass_(mass), hbar_(hbar), dt_(dt) {
    pml.validate();
    double bound = stable_dt(grid, potential, mass, hbar);
    if (dt > bound * (1.0 + 1e-12))
        throw validation_error(
            "BarrierEvolver: dt violates the stability bound "
            "dt <= 0.1*hbar/(hbar^2/(m*dx^2) + max|V|)");

    const std::size_t n = grid.n_points;
    const double kin = hbar * hbar / (2.0 * mass * grid.dx * grid.dx);
    std::vector<double> v = potential.sample(grid);

    a_sub_.assign(n, 0.0);  a_diag_.assign(n, 0.0);  a_sup_.assign(n, 0.0);
    b_sub_.assign(n, 0.0);  b_diag_.assign(n, 0.0);  b_sup_.assign(n, 0.0);

    // Interior rows; Dirichlet walls at both ends (rows stay zero).
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double x = grid.x(i);
        cplx inv_s = 1.0 / pml.stretch(x, grid.x_min, grid.x_max);
        cplx inv_sm = 1.0 / pml.stretch(x - 0.5 * grid.dx, grid.x_min, grid.x_max);
        cplx inv_sp = 1.0 / pml.stretch(x + 0.5 * grid.dx, grid.x_min, grid.x_max);
        cplx sub = -kin * inv_s * inv_sm;
        cplx sup = -kin * inv_s * inv_sp;
        cplx diag = kin * inv_s * (inv_sm + inv_sp) + v[i];
        a_sub_[i] = sub.real();  b_sub_[i] = sub.imag();
        a_sup_[i] = sup.real();  b_sup_[i] = sup.imag();
        a_diag_[i] = diag.real(); b_diag_[i] = diag.imag();
    }

    // Rows touched by the anti-Hermitian part, grouped into blocks.
    std::vector<bool> active(n, false);
    for (std::size_t i = 0; i < n; ++i)
        if (b_sub_[i] != 0.0 || b_diag_[i] != 0.0 || b_sup_[i] != 0.0)
            active[i] = true;
    for (std::size_t i = 0; i < n;) {
        if (!active[i]) { ++i; continue; }
        std::size_t lo = i;
        while (i < n && active[i]) ++i;
        damp_blocks_.push_back({lo, i - 1});
    }

    // Prefactor (I - dt/hbar * B) per block for the implicit damping solve.
    double kappa = dt_ / hbar_;
    thomas_sub_.assign(n, 0.0);
    thomas_sup_.assign(n, 0.0);
    thomas_diag_.assign(n, 1.0);
    for (const auto& blk : damp_blocks_) {
        for (std::size_t i = blk.lo; i <= blk.hi; ++i) {
            thomas_sub_[i] = -kappa * b_sub_[i];
            thomas_diag_[i] = 1.0 - kappa * b_diag_[i];
            thomas_sup_[i] = -kappa * b_sup_[i];
        }
    }
    scratch_.assign(n, 0.0);
}

void BarrierEvolver::apply_hermitian(const std::vector<double>& in,
                                     std::vector<double>& out) const {
    const std::size_t n = grid_.n_points;
    out[0] = 0.0;
    out[n - 1] = 0.0;
    const double* __restrict a = a_sub_.data();
    const double* __restrict d = a_diag_.data();
    const double* __restrict c = a_sup_.data();
    const double* __restrict u = in.data();
    double* __restrict y = out.data();
    for (std::size_t i = 1; i + 1 < n; ++i)
        y[i] = a[i] * u[i - 1] + d[i] * u[i] + c[i] * u[i + 1];
}

void BarrierEvolver::damp(std::vector<double>& v) const {
    // Thomas solve of (I - dt/hbar B) y = v restricted to each active block;
    // rows outside the blocks are the identity. Couplings to the first row
    // outside a block use the already-known identity value.
    for (const auto& blk : damp_blocks_) {
        std::size_t lo = blk.lo, hi = blk.hi;
        std::size_t m = hi - lo + 1;
        std::vector<double>& cp = scratch_; // reused forward-sweep storage
        // rhs adjustments from fixed neighbours
        double rhs_lo = v[lo] - (lo > 0 ? thomas_sub_[lo] * v[lo - 1] : 0.0);
        double rhs_hi_adj = (hi + 1 < grid_.n_points) ? thomas_sup_[hi] * v[hi + 1] : 0.0;

        double beta = thomas_diag_[lo];
        v[lo] = rhs_lo / beta;
        for (std::size_t j = 1; j < m; ++j) {
            std::size_t i = lo + j;
            cp[j] = thomas_sup_[i - 1] / beta;
            beta = thomas_diag_[i] - thomas_sub_[i] * cp[j];
            double rhs = v[i] - (i == hi ? rhs_hi_adj : 0.0);
            v[i] = (rhs - thomas_sub_[i] * v[i - 1]) / beta;
        }
        for (std::size_t j = m - 1; j-- > 0;)
            v[lo + j] -= cp[j + 1] * v[lo + j + 1];
    }
}

void BarrierEvolver::bootstrap(WaveState& state) const {
    auto& h_re = scratch_;
    apply_hermitian(state.re, h_re);
    double half = 0.5 * dt_ / hbar_;
    state.im_prev = state.im;
    for (std::size_t i = 0; i < grid_.n_points; ++i) {
        double d = half * h_re[i];
        state.im_prev[i] += d; // im at t - dt/2
        state.im[i] -= d;      // im at t + dt/2
    }
    state.stagger_dt = dt_;
}

void BarrierEvolver::check_finite(const WaveState& state) const {
    double m = 0.0;
    for (std::size_t i = 0; i < grid_.n_points; i += 7)
        m = std::max(m, std::abs(state.re[i]) + std::abs(state.im[i]));
    if (!std::isfinite(m) || m > 1e12)
        throw instability_error(
            "BarrierEvolver: register overflow; violated bound "
            "dt <= 0.1*hbar/(hbar^2/(m*dx^2) + max|V|)");
}

void BarrierEvolver::step(WaveState& state) const {
    if (state.grid.n_points != grid_.n_points)
        throw validation_error("BarrierEvolver: state grid mismatch");
    if (!state.staggered() || state.stagger_dt != dt_) {
        if (state.staggered())
            throw validation_error("BarrierEvolver: state staggered with a different dt");
        bootstrap(state);
    }

    const std::size_t n = grid_.n_points;
    const double kappa = dt_ / hbar_;

    apply_hermitian(state.im, scratch_);
    for (std::size_t i = 0; i < n; ++i) state.re[i] += kappa * scratch_[i];
    if (!damp_blocks_.empty()) damp(state.re);

    // Old im (t+dt/2) becomes the trailing register; its former contents are
    // overwritten with the new im at t+3dt/2.
    std::swap(state.im_prev, state.im);
    apply_hermitian(state.re, scratch_);
    for (std::size_t i = 0; i < n; ++i)
        state.im[i] = state.im_prev[i] - kappa * scratch_[i];
    if (!damp_blocks_.empty()) damp(state.im);

    state.t += dt_;
}

void BarrierEvolver::advance(WaveState& state, std::size_t n_steps) const {
    for (std::size_t s = 0; s < n_steps; ++s) {
        step(state);
        if ((s & 127u) == 127u) check_finite(state);
    }
    check_finite(state);
}

WaveState step(const WaveState& state, const PotentialProfile& potential,
               const PmlSpec& pml, double dt) {
    BarrierEvolver ev(state.grid, potential, pml, state.mass, state.hbar, dt);
    WaveState out = state;
    ev.step(out);
    return out;
}

// --- diagnostics -------------------------------------------------------------

double nonescape_probability(const WaveState& state, double l) {
    if (!state.grid.contains(-l) || !state.grid.contains(l))
        throw validation_error("nonescape_probability: [-l, l] not inside grid");
    return state.norm_between(-l, l);
}

double probability_current(const WaveState& state, double x) {
    std::size_t i = state.grid.index_near(x);
    if (i == 0 || i + 1 >= state.grid.n_points)
        throw validation_error("probability_current: x must be strictly inside the grid");
    auto psi = state.psi(i);
    auto dpsi = (state.psi(i + 1) - state.psi(i - 1)) / (2.0 * state.grid.dx);
    return state.hbar / state.mass * std::imag(std::conj(psi) * dpsi);
}

double decay_rate_from_flux(const WaveState& state, double l, double w) {
    double edge = l + w;
    double inside = state.norm_between(-edge, edge);
    if (inside < 1e-12)
        throw numerical_error("decay_rate_from_flux: degenerate state (norm < 1e-12)");
    double jr = probability_current(state, edge);
    double jl = probability_current(state, -edge);
    return (jr - jl) / inside;
}

double decay_rate_formula(std::complex<double> a_plus, std::complex<double> a_minus,
                          double k, double l, double w, double mean_sq_phi,
                          double mass, double hbar) {
    if (!(mean_sq_phi > 0.0))
        throw validation_error("decay_rate_formula: mean_sq_phi must be positive");
    double amp2 = std::norm(a_plus) + std::norm(a_minus);
    return hbar * k / (2.0 * mass * (l + w)) * amp2 / mean_sq_phi;
}

double bohmian_velocity(const WaveState& state, double x) {
    std::size_t i = state.grid.index_near(x);
    if (i == 0 || i + 1 >= state.grid.n_points)
        throw validation_error("bohmian_velocity: x must be strictly inside the grid");
    double rho = std::norm(state.psi(i));
    if (rho <= 1e-30)
        throw numerical_error("bohmian_velocity: density below 1e-30, velocity undefined");
    return probability_current(state, x) / rho;
}

// --- decay fit ---------------------------------------------------------------

DecayFit fit_decay_rate(std::span<const double> t, std::span<const double> p,
                        double slope_tol, double r2_min) {
    if (t.size() != p.size() || t.size() < 8)
        throw validation_error("fit_decay_rate: need >= 8 matching samples");

    // log of the positive trailing part
    std::vector<double> lt, lp;
    lt.reserve(t.size());
    lp.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (p[i] > 0.0) { lt.push_back(t[i]); lp.push_back(std::log(p[i])); }
    }
    if (lt.size() < 8)
        throw numerical_error("fit_decay_rate: too few positive samples");

    // Local slopes over ~24 chunks; trailing run with <slope_tol variation.
    const std::size_t n = lt.size();
    const std::size_t n_chunks = std::min<std::size_t>(24, n / 4);
    const std::size_t chunk = n / n_chunks;
    std::vector<double> slopes(n_chunks);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        std::size_t a = c * chunk;
        std::size_t b = (c + 1 == n_chunks) ? n : a + chunk;
        slopes[c] = fit_line(std::span(lt).subspan(a, b - a),
                             std::span(lp).subspan(a, b - a)).slope;
    }
    double ref = slopes.back();
    if (!(ref < 0.0))
        throw numerical_error("fit_decay_rate: trailing window is not decaying");
    std::size_t c_begin = n_chunks - 1;
    while (c_begin > 0 &&
           std::abs(slopes[c_begin - 1] - ref) < slope_tol * std::abs(ref))
        --c_begin;

    std::size_t first = c_begin * chunk;
    auto fit = fit_line(std::span(lt).subspan(first), std::span(lp).subspan(first));
    if (fit.r_squared < r2_min)
        throw numerical_error("fit_decay_rate: no exponential window (R^2 = " +
                              std::to_string(fit.r_squared) + ")");
    return {-fit.slope, fit.r_squared, first, n - 1};
}

// --- time series -------------------------------------------------------------

void EscapeTimeSeries::record(const WaveState& state, double l, double w) {
    t.push_back(state.t);
    p_nonesc.push_back(nonescape_probability(state, l));
    norm_total.push_back(state.norm_total());
    double jr = probability_current(state, l + w);
    double jl = probability_current(state, -l - w);
    flux_right.push_back(jr);
    flux_left.push_back(jl);
    double inside = state.norm_between(-l - w, l + w);
    gamma_flux.push_back(inside > 1e-12 ? (jr - jl) / inside : 0.0);
}

void EscapeTimeSeries::write_csv(const std::string& path) const {
    CsvWriter csv(path, {"t", "P_nonesc", "norm_total", "flux_right",
                         "flux_left", "gamma_flux"});
    for (std::size_t i = 0; i < t.size(); ++i)
        csv.row({t[i], p_nonesc[i], norm_total[i], flux_right[i], flux_left[i],
                 gamma_flux[i]});
}

} // namespace leakycav
