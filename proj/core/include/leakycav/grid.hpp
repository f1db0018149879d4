#pragma once

#include <cstddef>

namespace leakycav {

// Uniform 1D grid with nodes x_i = x_min + i*dx, i = 0 .. n_points-1.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t n_points = 0;
    double dx = 0.0;

    Grid1D() = default;
    Grid1D(double x_min, double x_max, std::size_t n_points);

    double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx; }
    std::size_t index_near(double x) const;
    bool contains(double x) const { return x >= x_min && x <= x_max; }

    // Symmetric grid for double-barrier runs: dx is snapped so that the
    // barrier edges +-l and +-(l+w) land exactly on grid nodes, removing the
    // O(dx) ambiguity in where the potential step sits.
    static Grid1D barrier_aligned(double l, double w, double half_extent,
                                  double dx_target);
};

} // namespace leakycav
