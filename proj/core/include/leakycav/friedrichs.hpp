#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "leakycav/numerics.hpp"

namespace leakycav {

// Coupling function lambda(omega) between the discrete mode and the
// continuum, with units such that |lambda|^2/hbar^2 is a rate per unit
// omega. Zero outside the declared support.
class CouplingSpectrum {
public:
    enum class Tag { constant, lorentzian, tabulated };

    static CouplingSpectrum constant(cplx lambda0, double omega_min, double omega_max);
    // |lambda|^2 Lorentzian-shaped around omega_c with half width gamma_c.
    static CouplingSpectrum lorentzian(double lambda0, double omega_c, double gamma_c,
                                       double omega_min, double omega_max);
    static CouplingSpectrum tabulated(std::vector<double> omega, std::vector<cplx> lambda);

    cplx operator()(double omega) const;
    bool in_support(double omega) const {
        return omega >= omega_min_ && omega <= omega_max_;
    }
    double omega_min() const { return omega_min_; }
    double omega_max() const { return omega_max_; }
    Tag tag() const { return tag_; }

private:
    Tag tag_ = Tag::constant;
    std::function<cplx(double)> fn_;
    double omega_min_ = 0.0, omega_max_ = 0.0;
};

// Gamma = 4 pi |lambda(omega0)|^2 / hbar^2 (left- plus right-outgoing modes).
double decay_rate(const CouplingSpectrum& coupling, double omega0, double hbar = 1.0);

// omega_LS = -(2/hbar^2) vp integral |lambda(omega)|^2/(omega - omega0) domega.
double lamb_shift(const CouplingSpectrum& coupling, double omega0, double hbar = 1.0);

// Continuum dispersion: massless omega = c k, or massive with the linearized
// omega = omega0 + v_dB (k - k0), v_dB = hbar k0 / m.
struct Dispersion {
    double front_speed = 1.0; // c or v_dB
    double k0 = 0.0;          // carrier wavenumber (omega0/c for massless)

    static Dispersion massless(double c = 1.0, double omega0 = 1.0) {
        return {c, omega0 / c};
    }
    static Dispersion massive(double k0, double mass, double hbar = 1.0) {
        return {hbar * k0 / mass, k0};
    }
    double omega_of_k(double k, double omega0) const {
        return omega0 + front_speed * (k - k0);
    }
    double k_of_omega(double omega, double omega0) const {
        return k0 + (omega - omega0) / front_speed;
    }
};

struct FriedrichsSystem {
    double omega0 = 1.0;
    CouplingSpectrum coupling = CouplingSpectrum::constant({0.0, 0.0}, 0.0, 1.0);
    Dispersion dispersion;
    double hbar = 1.0;
    double gamma = 0.0;        // derived
    double lamb = 0.0;         // derived Lamb shift
    bool weak_coupling_ok = true;

    // Massless light-like dispersion with c = 1 unless one is supplied.
    static FriedrichsSystem make(double omega0, CouplingSpectrum coupling,
                                 double hbar = 1.0);
    static FriedrichsSystem make(double omega0, CouplingSpectrum coupling,
                                 Dispersion dispersion, double hbar = 1.0);

    double omega_bar() const { return omega0 + lamb; } // shifted frequency
};

// Uniform-in-omega mesh of continuum modes, returned as k values.
std::vector<double> make_k_mesh(const FriedrichsSystem& sys,
                                double span_gammas = 50.0,
                                double points_per_gamma = 20.0);

struct AmplitudeTrajectory {
    std::vector<double> times;
    std::vector<cplx> alpha;
    std::vector<double> k_mesh;              // mode labels
    std::vector<std::vector<cplx>> beta;     // beta[time][mode]; may be empty
    double hbar = 1.0;

    double survival(std::size_t i) const { return std::norm(alpha[i]); }
    // |alpha|^2 + integral domega |beta|^2 at sample i (needs beta tracked).
    double total_norm(std::size_t i, const FriedrichsSystem& sys) const;
};

// Closed-form Wigner-Weisskopf amplitudes:
//   alpha(t) = exp(-i(omega0+omega_LS)t) exp(-Gamma t/2)
//   beta(k,t) with the pole at omega0 + omega_LS - i Gamma/2.
AmplitudeTrajectory closed_form_amplitudes(const FriedrichsSystem& sys,
                                           std::span<const double> times,
                                           std::span<const double> k_mesh);

struct IntegrateOptions {
    std::size_t n_outputs = 400;
    bool track_beta = true;
    double norm_drift_tol = 1e-3;
};

// Direct numerical solution of the coupled integro-differential system for
// (alpha, beta) on the discretized continuum; the memory integral over the
// alpha history is evaluated by the trapezoid rule (organized through exact
// exponential recursions, one per mesh mode, so a step costs O(mesh) instead
// of O(history)). Serves as the independent oracle for the closed form.
AmplitudeTrajectory integrate_amplitudes(const FriedrichsSystem& sys,
                                         double t_max, double dt,
                                         std::span<const double> k_mesh,
                                         const IntegrateOptions& opts = {});

// Closed-form outgoing wavefunction (light-cone result): zero for |x| > vt,
// inside the cone magnitude grows as exp((Gamma/2v)(|x| - vt)) toward the
// front with phase exp(i(omega_bar/v)(|x| - vt)).
cplx outgoing_wavefunction(const FriedrichsSystem& sys, double x, double t);

// Fourier synthesis of beta(k, t) over the mesh; oracle for the closed form.
cplx synthesize_outgoing(const FriedrichsSystem& sys,
                         std::span<const double> k_mesh,
                         std::span<const cplx> beta_row, double x);

// +-front_speed by side; throws outside the light cone.
double bohmian_outgoing_velocity(const FriedrichsSystem& sys, double x, double t);

} // namespace leakycav
