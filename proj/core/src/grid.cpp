#include "leakycav/grid.hpp"

#include <cmath>
#include <string>

#include "leakycav/errors.hpp"

namespace leakycav {

Grid1D::Grid1D(double x_min_, double x_max_, std::size_t n_points_)
    : x_min(x_min_), x_max(x_max_), n_points(n_points_) {
    if (!(x_max > x_min))
        throw validation_error("Grid1D: x_max must exceed x_min");
    if (n_points < 3)
        throw validation_error("Grid1D: need at least 3 points");
    dx = (x_max - x_min) / static_cast<double>(n_points - 1);
}

std::size_t Grid1D::index_near(double x) const {
    if (!contains(x))
        throw validation_error("Grid1D: x outside grid");
    double idx = (x - x_min) / dx;
    auto i = static_cast<std::size_t>(std::llround(idx));
    return i >= n_points ? n_points - 1 : i;
}

Grid1D Grid1D::barrier_aligned(double l, double w, double half_extent,
                               double dx_target) {
    if (!(l > 0.0) || !(w > 0.0) || !(half_extent > l + w))
        throw validation_error("barrier_aligned: need 0 < l, 0 < w, half_extent > l+w");
    if (!(dx_target > 0.0))
        throw validation_error("barrier_aligned: dx_target must be positive");

    // Snap dx to an integer fraction of w, then require l to be commensurate.
    auto mw = static_cast<std::size_t>(std::ceil(w / dx_target));
    double dx = w / static_cast<double>(mw);
    double ratio = l / dx;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio)) {
        // Try snapping to l instead; w must then be commensurate.
        auto ml = static_cast<std::size_t>(std::ceil(l / dx_target));
        dx = l / static_cast<double>(ml);
        double rw = w / dx;
        if (std::abs(rw - std::round(rw)) > 1e-9 * std::max(1.0, rw))
            throw validation_error(
                "barrier_aligned: l and w are incommensurate at the requested "
                "resolution; choose l/w rational with a small denominator");
    }
    auto half_n = static_cast<std::size_t>(std::ceil(half_extent / dx));
    double x_half = static_cast<double>(half_n) * dx;
    return Grid1D(-x_half, x_half, 2 * half_n + 1);
}

} // namespace leakycav
