#include "leakycav/friedrichs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "leakycav/errors.hpp"

namespace leakycav {

using std::numbers::pi;

CouplingSpectrum CouplingSpectrum::constant(cplx lambda0, double omega_min,
                                            double omega_max) {
    if (!(omega_max > omega_min))
        throw validation_error("CouplingSpectrum: empty support");
    CouplingSpectrum s;
    s.tag_ = Tag::constant;
    s.fn_ = [lambda0](double) { return lambda0; };
    s.omega_min_ = omega_min;
    s.omega_max_ = omega_max;
    return s;
}

CouplingSpectrum CouplingSpectrum::lorentzian(double lambda0, double omega_c,
                                              double gamma_c, double omega_min,
                                              double omega_max) {
    if (!(omega_max > omega_min) || !(gamma_c > 0.0))
        throw validation_error("CouplingSpectrum: bad lorentzian parameters");
    CouplingSpectrum s;
    s.tag_ = Tag::lorentzian;
    s.fn_ = [=](double w) {
        double d = w - omega_c;
        return cplx(lambda0 * gamma_c / std::sqrt(d * d + gamma_c * gamma_c), 0.0);
    };
    s.omega_min_ = omega_min;
    s.omega_max_ = omega_max;
    return s;
}

CouplingSpectrum CouplingSpectrum::tabulated(std::vector<double> omega,
                                             std::vector<cplx> lambda) {
    if (omega.size() != lambda.size() || omega.size() < 2)
        throw validation_error("CouplingSpectrum: tabulated needs >= 2 samples");
    if (!std::is_sorted(omega.begin(), omega.end()))
        throw validation_error("CouplingSpectrum: tabulated omegas must be sorted");
    CouplingSpectrum s;
    s.tag_ = Tag::tabulated;
    s.omega_min_ = omega.front();
    s.omega_max_ = omega.back();
    s.fn_ = [om = std::move(omega), la = std::move(lambda)](double w) -> cplx {
        auto it = std::upper_bound(om.begin(), om.end(), w);
        if (it == om.begin()) return la.front();
        if (it == om.end()) return la.back();
        std::size_t i = static_cast<std::size_t>(it - om.begin());
        double f = (w - om[i - 1]) / (om[i] - om[i - 1]);
        return la[i - 1] * (1.0 - f) + la[i] * f;
    };
    return s;
}

cplx CouplingSpectrum::operator()(double omega) const {
    if (!in_support(omega)) return {0.0, 0.0};
    return fn_(omega);
}

double decay_rate(const CouplingSpectrum& coupling, double omega0, double hbar) {
    if (!coupling.in_support(omega0))
        throw validation_error("decay_rate: omega0 outside the coupling support");
    double l2 = std::norm(coupling(omega0));
    return 4.0 * pi * l2 / (hbar * hbar);
}

double lamb_shift(const CouplingSpectrum& coupling, double omega0, double hbar) {
    if (!std::isfinite(coupling.omega_min()) || !std::isfinite(coupling.omega_max()))
        throw numerical_error("lamb_shift: divergent (unbounded coupling support)");
    auto g = [&](double w) { return std::norm(coupling(w)); };
    double a = coupling.omega_min(), b = coupling.omega_max();
    double integral;
    if (omega0 > a && omega0 < b) {
        integral = principal_value(g, a, b, omega0, 1e-8);
    } else {
        integral = integrate_adaptive([&](double w) { return g(w) / (w - omega0); },
                                      a, b, 1e-8);
    }
    return -2.0 / (hbar * hbar) * integral;
}

FriedrichsSystem FriedrichsSystem::make(double omega0, CouplingSpectrum coupling,
                                        double hbar) {
    return make(omega0, std::move(coupling), Dispersion::massless(1.0, omega0), hbar);
}

FriedrichsSystem FriedrichsSystem::make(double omega0, CouplingSpectrum coupling,
                                        Dispersion dispersion, double hbar) {
    FriedrichsSystem sys;
    sys.omega0 = omega0;
    sys.coupling = std::move(coupling);
    sys.dispersion = dispersion;
    sys.hbar = hbar;
    sys.gamma = decay_rate(sys.coupling, omega0, hbar);
    sys.lamb = lamb_shift(sys.coupling, omega0, hbar);
    // Golden-rule validity: |lambda(omega0)|^2/hbar^2 << omega0.
    sys.weak_coupling_ok =
        std::norm(sys.coupling(omega0)) / (hbar * hbar) < 1e-2 * omega0;
    return sys;
}

std::vector<double> make_k_mesh(const FriedrichsSystem& sys, double span_gammas,
                                double points_per_gamma) {
    double half = span_gammas * sys.gamma;
    double w_lo = std::max(sys.omega0 - half, sys.coupling.omega_min());
    double w_hi = std::min(sys.omega0 + half, sys.coupling.omega_max());
    auto n = static_cast<std::size_t>(
        std::ceil((w_hi - w_lo) / sys.gamma * points_per_gamma)) + 1;
    std::vector<double> mesh(n);
    for (std::size_t i = 0; i < n; ++i) {
        double w = w_lo + (w_hi - w_lo) * static_cast<double>(i) / (n - 1);
        mesh[i] = sys.dispersion.k_of_omega(w, sys.omega0);
    }
    return mesh;
}

namespace {

// Trapezoid weights in omega for a (not necessarily uniform) k mesh.
std::vector<double> omega_weights(const FriedrichsSystem& sys,
                                  std::span<const double> k_mesh) {
    std::size_t n = k_mesh.size();
    if (n < 2) throw validation_error("friedrichs: k_mesh needs >= 2 points");
    std::vector<double> w(n, 0.0);
    auto omega = [&](std::size_t i) {
        return sys.dispersion.omega_of_k(k_mesh[i], sys.omega0);
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double dw = omega(i + 1) - omega(i);
        w[i] += 0.5 * dw;
        w[i + 1] += 0.5 * dw;
    }
    return w;
}

} // namespace

double AmplitudeTrajectory::total_norm(std::size_t i, const FriedrichsSystem& sys) const {
    if (beta.empty())
        throw validation_error("total_norm: beta was not tracked");
    auto w = omega_weights(sys, k_mesh);
    double s = std::norm(alpha[i]);
    for (std::size_t l = 0; l < k_mesh.size(); ++l)
        s += w[l] * std::norm(beta[i][l]);
    return s;
}

AmplitudeTrajectory closed_form_amplitudes(const FriedrichsSystem& sys,
                                           std::span<const double> times,
                                           std::span<const double> k_mesh) {
    AmplitudeTrajectory tr;
    tr.hbar = sys.hbar;
    tr.times.assign(times.begin(), times.end());
    tr.k_mesh.assign(k_mesh.begin(), k_mesh.end());
    tr.alpha.resize(times.size());
    tr.beta.resize(times.size());

    const double wbar = sys.omega_bar();
    const double g2 = 0.5 * sys.gamma;
    for (std::size_t i = 0; i < times.size(); ++i) {
        double t = times[i];
        tr.alpha[i] = std::polar(std::exp(-g2 * t), -wbar * t);
        auto& row = tr.beta[i];
        row.resize(k_mesh.size());
        for (std::size_t l = 0; l < k_mesh.size(); ++l) {
            double w = sys.dispersion.omega_of_k(k_mesh[l], sys.omega0);
            cplx lam = sys.coupling(w) / sys.hbar;
            cplx denom(w - wbar, g2);
            cplx osc = std::polar(std::exp(-g2 * t), (w - wbar) * t);
            row[l] = std::polar(1.0, -w * t) * lam * (1.0 - osc) / denom;
        }
    }
    return tr;
}

AmplitudeTrajectory integrate_amplitudes(const FriedrichsSystem& sys,
                                         double t_max, double dt,
                                         std::span<const double> k_mesh,
                                         const IntegrateOptions& opts) {
    const double w_max = std::max(
        std::abs(sys.dispersion.omega_of_k(k_mesh.front(), sys.omega0)),
        std::abs(sys.dispersion.omega_of_k(k_mesh.back(), sys.omega0)));
    if (!(dt < 0.01 / std::max(w_max, sys.gamma)))
        throw validation_error(
            "integrate_amplitudes: dt must satisfy dt < 0.01/max(omega_max, Gamma)");

    const std::size_t n_modes = k_mesh.size();
    auto wts = omega_weights(sys, k_mesh);
    const auto n_steps = static_cast<std::size_t>(std::ceil(t_max / dt));
    const std::size_t n_out = std::max<std::size_t>(2, std::min(opts.n_outputs, n_steps + 1));

    // Per-mode precomputation. Work in the rotating frame abar = e^{i w0 t} a.
    std::vector<double> gw(n_modes);   // |lambda|^2/hbar^2 * trapezoid weight
    std::vector<cplx> lam(n_modes);    // lambda/hbar
    std::vector<cplx> z(n_modes);      // e^{i(w0-w) dt}
    std::vector<cplx> zc(n_modes);     // conjugate rotation for beta
    std::vector<cplx> s_hist(n_modes); // sum_j z^{n-j} abar_j
    std::vector<cplx> zpow(n_modes);   // z^n
    std::vector<cplx> wrot(n_modes);   // e^{-i(w0-w) t_n}
    std::vector<cplx> q_acc(n_modes);  // trapezoid of e^{-i(w0-w)t'} abar(t')
    double g_tot = 0.0;
    for (std::size_t l = 0; l < n_modes; ++l) {
        double w = sys.dispersion.omega_of_k(k_mesh[l], sys.omega0);
        lam[l] = sys.coupling(w) / sys.hbar;
        gw[l] = std::norm(lam[l]) * wts[l];
        g_tot += gw[l];
        double delta = sys.omega0 - w;
        z[l] = std::polar(1.0, delta * dt);
        zc[l] = std::conj(z[l]);
        s_hist[l] = {1.0, 0.0}; // abar_0 = 1
        zpow[l] = {1.0, 0.0};
        wrot[l] = {1.0, 0.0};
        q_acc[l] = {0.0, 0.0};
    }

    AmplitudeTrajectory tr;
    tr.hbar = sys.hbar;
    tr.k_mesh.assign(k_mesh.begin(), k_mesh.end());

    cplx abar(1.0, 0.0);
    cplx f_prev(0.0, 0.0); // memory term at step 0 vanishes
    double t = 0.0;

    // output schedule
    std::vector<std::size_t> out_steps(n_out);
    for (std::size_t i = 0; i < n_out; ++i)
        out_steps[i] = static_cast<std::size_t>(
            std::llround(static_cast<double>(i) * n_steps / (n_out - 1)));
    std::size_t next_out = 0;

    auto emit = [&](std::size_t /*step*/) {
        tr.times.push_back(t);
        tr.alpha.push_back(abar * std::polar(1.0, -sys.omega0 * t));
        if (opts.track_beta) {
            std::vector<cplx> row(n_modes);
            for (std::size_t l = 0; l < n_modes; ++l) {
                double w = sys.dispersion.omega_of_k(k_mesh[l], sys.omega0);
                // beta = -(i/hbar) lambda e^{-i w t} Q(t)
                row[l] = cplx(0.0, -1.0) * lam[l] * std::polar(1.0, -w * t) * q_acc[l];
            }
            tr.beta.push_back(std::move(row));
        }
    };
    emit(0);
    ++next_out;

    const double denom = 1.0 + 0.25 * dt * dt * g_tot;
    cplx abar_prev = abar;
    for (std::size_t n = 0; n < n_steps; ++n) {
        // implicit-trapezoid step of dabar/dt = F(t) with
        // F(t_n) = -sum_l gw_l * dt * [S_l(n) - (zpow_l + abar_n)/2]
        cplx c_sum(0.0, 0.0);
        for (std::size_t l = 0; l < n_modes; ++l)
            c_sum += gw[l] * (z[l] * s_hist[l] - 0.5 * z[l] * zpow[l]);
        cplx rhs = abar + 0.5 * dt * f_prev - 0.5 * dt * dt * c_sum;
        cplx abar_next = rhs / denom;

        // refresh recursions with the accepted abar_{n+1}
        cplx f_next(0.0, 0.0);
        for (std::size_t l = 0; l < n_modes; ++l) {
            s_hist[l] = z[l] * s_hist[l] + abar_next;
            zpow[l] *= z[l];
            f_next -= gw[l] * dt * (s_hist[l] - 0.5 * (zpow[l] + abar_next));
        }
        // beta accumulators (trapezoid in t') advance with the pair
        // (abar_n, abar_{n+1})
        if (opts.track_beta) {
            for (std::size_t l = 0; l < n_modes; ++l) {
                cplx w_next = wrot[l] * zc[l];
                q_acc[l] += 0.5 * dt * (wrot[l] * abar_prev + w_next * abar_next);
                wrot[l] = w_next;
            }
        }
        abar_prev = abar_next;
        abar = abar_next;
        f_prev = f_next;
        t = static_cast<double>(n + 1) * dt;

        if (next_out < n_out && n + 1 == out_steps[next_out]) {
            emit(n + 1);
            ++next_out;
        }
    }

    if (opts.track_beta) {
        double drift = std::abs(tr.total_norm(tr.times.size() - 1, sys) - 1.0);
        if (drift > opts.norm_drift_tol)
            throw numerical_error(
                "integrate_amplitudes: norm drift " + std::to_string(drift) +
                " exceeds tolerance; k_mesh too coarse");
    }
    return tr;
}

cplx outgoing_wavefunction(const FriedrichsSystem& sys, double x, double t) {
    double v = sys.dispersion.front_speed;
    double ax = std::abs(x);
    if (ax >= v * t || t <= 0.0) return {0.0, 0.0};
    double wbar = sys.omega_bar();
    cplx lam = sys.coupling(wbar) / sys.hbar;
    double u = ax - v * t; // negative inside the cone
    double mag = std::sqrt(2.0 * pi / v) * std::exp(0.5 * sys.gamma * u / v);
    double carrier = (sys.dispersion.k0 - sys.omega0 / v) * ax + wbar * u / v;
    return cplx(0.0, -1.0) * lam * mag * std::polar(1.0, carrier);
}

cplx synthesize_outgoing(const FriedrichsSystem& sys,
                         std::span<const double> k_mesh,
                         std::span<const cplx> beta_row, double x) {
    if (k_mesh.size() != beta_row.size())
        throw validation_error("synthesize_outgoing: mesh/beta size mismatch");
    auto wts = omega_weights(sys, k_mesh);
    double v = sys.dispersion.front_speed;
    double ax = std::abs(x);
    cplx acc(0.0, 0.0);
    for (std::size_t l = 0; l < k_mesh.size(); ++l)
        acc += wts[l] * beta_row[l] * std::polar(1.0, k_mesh[l] * ax);
    return acc / std::sqrt(2.0 * pi * v);
}

double bohmian_outgoing_velocity(const FriedrichsSystem& sys, double x, double t) {
    double v = sys.dispersion.front_speed;
    if (std::abs(x) >= v * t)
        throw numerical_error(
            "bohmian_outgoing_velocity: outside the light cone, undefined");
    return x >= 0.0 ? v : -v;
}

} // namespace leakycav
