#include "leakycav/potential.hpp"

#include <algorithm>
#include <cmath>

#include "leakycav/errors.hpp"
#include "leakycav/units.hpp"

namespace leakycav {

PotentialProfile::PotentialProfile(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (!(segments_[i].x_end > segments_[i].x_start))
            throw validation_error("PotentialProfile: empty or inverted segment");
        if (i > 0 && std::abs(segments_[i].x_start - segments_[i - 1].x_end) >
                         1e-12 * std::max(1.0, std::abs(segments_[i].x_start)))
            throw validation_error("PotentialProfile: segments must be contiguous");
    }
}

PotentialProfile PotentialProfile::double_barrier(double v0, double l, double w) {
    if (!(l > 0.0) || !(w > 0.0))
        throw validation_error("double_barrier: l and w must be positive");
    std::vector<Segment> segs;
    segs.push_back({-l - w, -l, v0, {}});
    segs.push_back({-l, l, 0.0, {}});
    segs.push_back({l, l + w, v0, {}});
    PotentialProfile p(std::move(segs));
    p.barrier_lw_ = std::make_pair(l, w);
    return p;
}

PotentialProfile PotentialProfile::single_barrier(double v0, double w) {
    std::vector<Segment> segs;
    segs.push_back({0.0, w, v0, {}});
    return PotentialProfile(std::move(segs));
}

PotentialProfile PotentialProfile::free_space() { return PotentialProfile(); }

PotentialProfile PotentialProfile::coulomb_tail(double z_daughter, double r0_fm,
                                                double e_alpha_natural,
                                                double well_depth_natural,
                                                int n_steps) {
    if (!(r0_fm > 0.0) || n_steps < 2)
        throw validation_error("coulomb_tail: need r0 > 0 and n_steps >= 2");
    if (!(e_alpha_natural > 0.0))
        throw validation_error("coulomb_tail: need E_alpha > 0");
    // V(r) = 2 Z_d e^2/(4 pi eps0 r); natural-unit coupling constant.
    const double coupling =
        2.0 * z_daughter * units::e2_4pieps0_MeV_fm / units::NuclearUnits::energy_MeV;
    const double v_r0 = coupling / r0_fm;
    if (e_alpha_natural >= v_r0)
        throw validation_error("coulomb_tail: E_alpha above barrier top at R0");
    const double turning = coupling / e_alpha_natural;
    const double r_out = 1.2 * turning;

    std::vector<Segment> segs;
    segs.push_back({0.0, r0_fm, -well_depth_natural, {}});
    const double h = (r_out - r0_fm) / n_steps;
    for (int i = 0; i < n_steps; ++i) {
        double a = r0_fm + i * h;
        double b = a + h;
        segs.push_back({a, b, coupling / (0.5 * (a + b)), {}});
    }
    PotentialProfile p(std::move(segs));
    p.hard_wall_ = true;
    return p;
}

double PotentialProfile::operator()(double x) const {
    for (const auto& s : segments_) {
        if (x >= s.x_start && x < s.x_end)
            return s.is_constant() ? s.value : s.fn(x);
    }
    if (!segments_.empty() && x == segments_.back().x_end) {
        const auto& s = segments_.back();
        return s.is_constant() ? s.value : s.fn(x);
    }
    return 0.0;
}

std::vector<double> PotentialProfile::sample(const Grid1D& grid) const {
    std::vector<double> v(grid.n_points, 0.0);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        double x = grid.x(i);
        // Midpoint-of-containing-segment convention: nudge off any edge
        // shared with a node so the sample is unambiguous.
        for (const auto& s : segments_) {
            if (x >= s.x_start - 0.25 * grid.dx && x < s.x_end - 0.25 * grid.dx) {
                v[i] = s.is_constant() ? s.value : s.fn(std::min(x + 0.25 * grid.dx, s.x_end));
                break;
            }
        }
    }
    return v;
}

double PotentialProfile::max_abs() const {
    double m = 0.0;
    for (const auto& s : segments_) {
        if (s.is_constant()) {
            m = std::max(m, std::abs(s.value));
        } else {
            for (int i = 0; i <= 32; ++i) {
                double x = s.x_start + (s.x_end - s.x_start) * i / 32.0;
                m = std::max(m, std::abs(s.fn(x)));
            }
        }
    }
    return m;
}

bool PotentialProfile::piecewise_constant() const {
    return std::all_of(segments_.begin(), segments_.end(),
                       [](const Segment& s) { return s.is_constant(); });
}

double PotentialProfile::interior_min() const {
    if (segments_.empty())
        throw validation_error("interior_min: free profile has no interfaces");
    return segments_.front().x_start;
}

double PotentialProfile::interior_max() const {
    if (segments_.empty())
        throw validation_error("interior_max: free profile has no interfaces");
    return segments_.back().x_end;
}

} // namespace leakycav
