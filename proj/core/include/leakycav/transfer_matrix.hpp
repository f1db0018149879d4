#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "leakycav/potential.hpp"

namespace leakycav {

// Relates (right-moving, left-moving) amplitudes in the left asymptotic
// region to those in the right asymptotic region for a piecewise-constant
// potential. Entries may carry a common factor exp(log_scale) split off to
// dodge evanescent overflow.
struct TransferMatrix {
    std::complex<double> m11, m12, m21, m22;
    std::complex<double> k;
    double log_scale = 0.0;
    bool rescaled = false;

    // Determinant including the split-off scale; equals q_left/q_right,
    // i.e. exactly 1 when the asymptotic potentials agree.
    std::complex<double> det() const;
};

TransferMatrix transfer_matrix(const PotentialProfile& profile,
                               std::complex<double> k,
                               double mass = 1.0, double hbar = 1.0);

// Matrix element whose zero enforces outgoing-only asymptotics: M22 for
// free-standing profiles, M21 - M22 for profiles with a hard wall at the
// origin. The zeros of this function are the Siegert/Gamow poles.
std::complex<double> siegert_residual(const PotentialProfile& profile,
                                      std::complex<double> k,
                                      double mass = 1.0, double hbar = 1.0);

// Transmission/reflection amplitudes for a wave incident from the left at
// real k (derived from the matrix entries).
std::pair<std::complex<double>, std::complex<double>>
scattering_amplitudes(const PotentialProfile& profile, double k,
                      double mass = 1.0, double hbar = 1.0);

namespace detail {

// Constant-potential steps (value, width) plus boundary condition, the form
// consumed by the templated transfer-matrix core.
struct StepSequence {
    std::vector<std::pair<double, double>> steps; // (V, width)
    bool hard_wall = false;
    double x_first = 0.0; // left edge of the first step
};

StepSequence to_steps(const PotentialProfile& profile);

} // namespace detail

} // namespace leakycav
