#pragma once

#include <vector>

#include "leakycav/numerics.hpp"
#include "leakycav/units.hpp"

namespace leakycav {

// Alpha-decay inputs in nuclear units (MeV, fm). The daughter-radius
// convention R0 = r0 (A_d^{1/3} + 4^{1/3}) with r0 = 1.2 fm is the default;
// scenarios may override r0 or R0 outright, since the radius convention
// dominates the rate uncertainty.
struct AlphaDecayScenario {
    double e_alpha_MeV = 0.0;
    double z_daughter = 0.0;
    double a_daughter = 0.0;
    double r0_fm = 0.0;          // resolved nucleus radius R0
    double p_alpha = 1.0;        // preformation probability, taken as 1
    double m_alpha_MeV = units::m_alpha_MeV;

    static constexpr double default_r0_coeff_fm = 1.2;

    static AlphaDecayScenario make(double e_alpha_MeV, double z_daughter,
                                   double a_daughter,
                                   double r0_coeff_fm = default_r0_coeff_fm);

    void validate() const;

    // Coulomb barrier 2 Z_d e^2 / (4 pi eps0 r); value at R0 and the outer
    // classical turning point.
    double coulomb_coupling_MeV_fm() const;
    double barrier_at_r0_MeV() const;
    double turning_point_fm() const;
};

// f = v_alpha / (2 R0), in 1/s.
double collision_frequency(const AlphaDecayScenario& s);

// T = exp(-2 integral sqrt(2m(V - E))/hbar dr) over [R0, b], adaptive
// quadrature with relative tolerance 1e-8.
double wkb_transmission(const AlphaDecayScenario& s);

// Gamma_G = p(alpha) f T, in 1/s.
double gamow_rate(const AlphaDecayScenario& s);

struct GeigerNuttallScan {
    std::vector<double> e_MeV;
    std::vector<double> inv_sqrt_e;
    std::vector<double> log10_gamma;
    LineFit line; // log10(Gamma) vs Z_d / sqrt(E)
};

GeigerNuttallScan geiger_nuttall_scan(double z_daughter,
                                      double e_min_MeV, double e_max_MeV,
                                      int n_points,
                                      const AlphaDecayScenario& scenario_template);

} // namespace leakycav
