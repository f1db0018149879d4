#pragma once

#include <complex>
#include <vector>

#include "leakycav/grid.hpp"
#include "leakycav/potential.hpp"
#include "leakycav/wave_state.hpp"

namespace leakycav {

struct ResonancePole {
    std::complex<double> k;
    std::complex<double> energy; // hbar^2 k^2 / 2m
    double gamma = 0.0;          // -2 Im(E)/hbar
    double lifetime = 0.0;       // 1/gamma
    double residual = 0.0;       // |siegert_residual| after polishing
};

struct SearchRegion {
    double k_re_min = 0.0, k_re_max = 1.0;
    double k_im_min = -1.0, k_im_max = 0.0; // must stay in (-inf, 0]
    int max_depth = 14;                     // >= 10
    int boundary_samples = 256;             // per rectangle side

    void validate() const;
};

// All zeros of the Siegert residual inside the region, isolated by recursive
// four-way subdivision guided by the boundary winding number, polished by
// Newton iteration, sorted by ascending |Im k| (longest-lived first).
std::vector<ResonancePole> find_poles(const PotentialProfile& profile,
                                      const SearchRegion& region,
                                      double mass = 1.0, double hbar = 1.0);

// Leaky eigenstate for a found pole, built by transfer-matrix propagation
// with outgoing-only asymptotics, normalized to unit norm over the
// non-asymptotic (interior) region.
WaveState gamow_state(const PotentialProfile& profile, const ResonancePole& pole,
                      const Grid1D& grid, double mass = 1.0, double hbar = 1.0);

// Complex wavefunction samples of the same eigenstate (pre-normalization
// helper exposed for diagnostics).
std::vector<std::complex<double>> gamow_profile(const PotentialProfile& profile,
                                                std::complex<double> k,
                                                const Grid1D& grid,
                                                double mass = 1.0, double hbar = 1.0);

// (gamma, lifetime) from a complex wavenumber.
std::pair<double, double> pole_to_rate(std::complex<double> k,
                                       double mass = 1.0, double hbar = 1.0);

// Winding number of the residual along the rectangle boundary (exposed for
// the argument-principle property tests).
int residual_winding(const PotentialProfile& profile,
                     double re_min, double re_max, double im_min, double im_max,
                     int samples_per_side, double mass = 1.0, double hbar = 1.0);

} // namespace leakycav
