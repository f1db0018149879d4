#pragma once

#include <complex>

#include "leakycav/potential.hpp"

namespace leakycav {

// Extended-precision polishing of a Siegert pole. Ultra-narrow resonances
// (alpha decay: Gamma/E down to ~1e-35 in natural units) cannot be resolved
// by double-precision contour counting, because the residual near its zero
// is the difference of exponentially large terms. The same transfer-matrix
// residual evaluated in 256-bit arithmetic with Newton iteration resolves
// them directly.
struct NarrowPoleResult {
    std::complex<double> k;      // natural units
    double gamma = 0.0;          // natural units; -2 Re(k) Im(k) hbar/m
    double lifetime = 0.0;       // natural units
    double residual_log10 = 0.0; // log10 |residual| at the returned k
    int iterations = 0;
};

NarrowPoleResult narrow_pole(const PotentialProfile& profile,
                             std::complex<double> k_seed,
                             double mass = 1.0, double hbar = 1.0,
                             int max_iterations = 80);

// Real-axis quasibound energy detector for profiles with a single barrier:
// the coefficient of the barrier's growing solution, scaled segment by
// segment, changes sign exactly at the quasibound levels. Returns that
// coefficient (normalized to [-1, 1]) for outward shooting at energy E.
double quasibound_detector(const PotentialProfile& profile, double energy,
                           double mass = 1.0, double hbar = 1.0);

// Bisects the detector's zero in [e_min, e_max]; throws when no sign change.
double quasibound_energy(const PotentialProfile& profile,
                         double e_min, double e_max,
                         double mass = 1.0, double hbar = 1.0);

} // namespace leakycav
