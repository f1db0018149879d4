#pragma once

namespace leakycav::units {

// CODATA 2018 values.
inline constexpr double c_m_per_s        = 2.99792458e8;
inline constexpr double hbar_J_s         = 1.054571817e-34;
inline constexpr double hbar_MeV_s       = 6.582119569e-22;
inline constexpr double hbar_c_MeV_fm    = 197.3269804;
inline constexpr double m_alpha_MeV      = 3727.3794066;   // alpha-particle rest energy
inline constexpr double e2_4pieps0_MeV_fm = 1.43996454;    // e^2/(4 pi eps0)
inline constexpr double mu0_H_per_m      = 1.25663706212e-6;
inline constexpr double vacuum_impedance_ohm = 376.730313; // Z0, pinned

inline constexpr double fm_m  = 1e-15;
inline constexpr double nm_m  = 1e-9;
inline constexpr double mm_m  = 1e-3;
inline constexpr double MeV_J = 1.602176634e-13;

// Natural unit system for the nuclear transfer-matrix work:
// hbar = 1, mass = m_alpha, length unit = 1 fm. Everything else follows.
struct NuclearUnits {
    // energy unit in MeV: (hbar c)^2 / (m_alpha c^2 * fm^2)
    static constexpr double energy_MeV =
        hbar_c_MeV_fm * hbar_c_MeV_fm / m_alpha_MeV;
    // time unit in seconds: hbar / energy_unit
    static constexpr double time_s = hbar_MeV_s / energy_MeV;

    static constexpr double energy_to_natural(double e_mev) { return e_mev / energy_MeV; }
    static constexpr double energy_to_MeV(double e_nat)     { return e_nat * energy_MeV; }
    static constexpr double rate_to_si(double gamma_nat)    { return gamma_nat / time_s; }
    static constexpr double rate_to_natural(double gamma_si){ return gamma_si * time_s; }
};

} // namespace leakycav::units
