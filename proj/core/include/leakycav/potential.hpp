#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "leakycav/grid.hpp"

namespace leakycav {

// Piecewise description of V(x). Segments are contiguous and ordered;
// each holds either a constant value or a sampled function.
class PotentialProfile {
public:
    struct Segment {
        double x_start;
        double x_end;
        double value;                                  // used when fn is empty
        std::function<double(double)> fn;              // optional x -> V
        bool is_constant() const { return !fn; }
    };

    PotentialProfile() = default; // free particle, V = 0 everywhere
    explicit PotentialProfile(std::vector<Segment> segments);

    // V0 on [-l-w, -l] and [l, l+w], zero elsewhere.
    static PotentialProfile double_barrier(double v0, double l, double w);
    // Single barrier V0 on [0, w].
    static PotentialProfile single_barrier(double v0, double w);
    static PotentialProfile free_space();
    // Half-line radial model for alpha decay: V = -well_depth on [0, r0],
    // then an n_steps staircase of 2*z_d*e^2/(4 pi eps0 r) out to
    // 1.2x the classical turning point, zero beyond. Hard wall at r = 0.
    // Energies/lengths in nuclear natural units (hbar = m_alpha = 1, fm).
    static PotentialProfile coulomb_tail(double z_daughter, double r0_fm,
                                         double e_alpha_natural,
                                         double well_depth_natural,
                                         int n_steps = 64);

    double operator()(double x) const;

    // Midpoint sample of the segment containing each node. Step edges that
    // coincide with nodes are attributed to the segment on the right.
    std::vector<double> sample(const Grid1D& grid) const;

    double max_abs() const;

    const std::vector<Segment>& segments() const { return segments_; }
    bool piecewise_constant() const;
    bool hard_wall_at_origin() const { return hard_wall_; }

    // For double_barrier profiles: the (l, w) pair.
    std::optional<std::pair<double, double>> barrier_geometry() const { return barrier_lw_; }

    // Extent of the non-asymptotic region (first/last internal interface).
    double interior_min() const;
    double interior_max() const;

private:
    std::vector<Segment> segments_; // empty => V = 0
    bool hard_wall_ = false;
    std::optional<std::pair<double, double>> barrier_lw_;
};

} // namespace leakycav
