#pragma once

#include <complex>
#include <vector>

#include "leakycav/grid.hpp"

namespace leakycav {

// Complex wavefunction on a 1D grid with the real and imaginary registers
// staggered by half a time step, as required by the central-difference
// leapfrog update. Freshly initialized states are collocated (im at the same
// time as re); the first step establishes the stagger.
//
// While stepping with step size dt:
//   re       at t
//   im       at t + dt/2
//   im_prev  at t - dt/2
struct WaveState {
    Grid1D grid;
    std::vector<double> re;
    std::vector<double> im;
    std::vector<double> im_prev; // empty while collocated
    double t = 0.0;
    double mass = 1.0;
    double hbar = 1.0;
    double stagger_dt = 0.0;     // 0 => collocated

    bool staggered() const { return stagger_dt != 0.0; }

    // psi_i at integer time t: re + i*(im + im_prev)/2 when staggered.
    std::complex<double> psi(std::size_t i) const;

    // |psi_i|^2 in the product form re^2 + im*im_prev, which the leapfrog
    // update conserves exactly for real potentials without PML.
    double density(std::size_t i) const;

    // Trapezoid integral of density over the whole grid.
    double norm_total() const;
    // ... over [a, b] (endpoints snapped to nodes).
    double norm_between(double a, double b) const;
};

// Normalized Gaussian packet exp(-(x-x0)^2/(4 sigma^2)) exp(i k_mean x).
// Rejects packets whose relative tail at either domain edge exceeds 1e-8.
WaveState init_gaussian(const Grid1D& grid, double x0, double sigma,
                        double k_mean, double mass = 1.0, double hbar = 1.0);

} // namespace leakycav
