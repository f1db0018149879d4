#include "leakycav/gamow.hpp"

#include <cmath>

#include "leakycav/errors.hpp"

namespace leakycav {

AlphaDecayScenario AlphaDecayScenario::make(double e_alpha_MeV, double z_daughter,
                                            double a_daughter, double r0_coeff_fm) {
    AlphaDecayScenario s;
    s.e_alpha_MeV = e_alpha_MeV;
    s.z_daughter = z_daughter;
    s.a_daughter = a_daughter;
    s.r0_fm = r0_coeff_fm * (std::cbrt(a_daughter) + std::cbrt(4.0));
    s.validate();
    return s;
}

void AlphaDecayScenario::validate() const {
    if (!(e_alpha_MeV > 0.0))
        throw validation_error("AlphaDecayScenario: E_alpha must be positive");
    if (!(r0_fm > 0.0))
        throw validation_error("AlphaDecayScenario: R0 must be positive");
    if (!(p_alpha > 0.0) || p_alpha > 1.0)
        throw validation_error("AlphaDecayScenario: p_alpha must lie in (0, 1]");
}

double AlphaDecayScenario::coulomb_coupling_MeV_fm() const {
    return 2.0 * z_daughter * units::e2_4pieps0_MeV_fm;
}

double AlphaDecayScenario::barrier_at_r0_MeV() const {
    return coulomb_coupling_MeV_fm() / r0_fm;
}

double AlphaDecayScenario::turning_point_fm() const {
    return coulomb_coupling_MeV_fm() / e_alpha_MeV;
}

double collision_frequency(const AlphaDecayScenario& s) {
    s.validate();
    double v = units::c_m_per_s * std::sqrt(2.0 * s.e_alpha_MeV / s.m_alpha_MeV);
    return v / (2.0 * s.r0_fm * units::fm_m);
}

double wkb_transmission(const AlphaDecayScenario& s) {
    s.validate();
    if (s.e_alpha_MeV >= s.barrier_at_r0_MeV())
        throw validation_error(
            "wkb_transmission: E_alpha at or above the barrier top, out of the "
            "tunneling regime");
    const double c = s.coulomb_coupling_MeV_fm();
    const double e = s.e_alpha_MeV;
    const double b = s.turning_point_fm();
    // kappa(r) = sqrt(2m(V - E))/hbar in 1/fm; substitute r = b - t^2 to
    // remove the square-root singularity at the turning point.
    const double pref = std::sqrt(2.0 * s.m_alpha_MeV) / units::hbar_c_MeV_fm;
    auto integrand = [&](double t) {
        double r = b - t * t;
        double dv = c / r - e;
        if (dv <= 0.0) return 0.0;
        return 2.0 * t * pref * std::sqrt(dv);
    };
    double t_max = std::sqrt(b - s.r0_fm);
    double action = integrate_adaptive(integrand, 0.0, t_max, 1e-8);
    return std::exp(-2.0 * action);
}

double gamow_rate(const AlphaDecayScenario& s) {
    return s.p_alpha * collision_frequency(s) * wkb_transmission(s);
}

GeigerNuttallScan geiger_nuttall_scan(double z_daughter,
                                      double e_min_MeV, double e_max_MeV,
                                      int n_points,
                                      const AlphaDecayScenario& scenario_template) {
    if (n_points < 3)
        throw validation_error("geiger_nuttall_scan: need at least 3 points");
    if (!(e_max_MeV > e_min_MeV) || !(e_min_MeV > 0.0))
        throw validation_error("geiger_nuttall_scan: bad energy range");

    GeigerNuttallScan scan;
    std::vector<double> z_over_sqrt_e;
    for (int i = 0; i < n_points; ++i) {
        double e = e_min_MeV + (e_max_MeV - e_min_MeV) * i / (n_points - 1);
        AlphaDecayScenario s = scenario_template;
        s.e_alpha_MeV = e;
        s.z_daughter = z_daughter;
        double gamma = gamow_rate(s);
        scan.e_MeV.push_back(e);
        scan.inv_sqrt_e.push_back(1.0 / std::sqrt(e));
        scan.log10_gamma.push_back(std::log10(gamma));
        z_over_sqrt_e.push_back(z_daughter / std::sqrt(e));
    }
    scan.line = fit_line(z_over_sqrt_e, scan.log10_gamma);
    return scan;
}

} // namespace leakycav
