#include "leakycav/resonance_poles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "leakycav/errors.hpp"
#include "leakycav/numerics.hpp"
#include "leakycav/transfer_matrix.hpp"

namespace leakycav {

namespace {

struct Rect {
    double re0, re1, im0, im1;
    double width() const { return re1 - re0; }
    double height() const { return im1 - im0; }
    cplx center() const { return {0.5 * (re0 + re1), 0.5 * (im0 + im1)}; }
    bool contains(cplx k, double margin) const {
        return k.real() >= re0 - margin && k.real() <= re1 + margin &&
               k.imag() >= im0 - margin && k.imag() <= im1 + margin;
    }
    std::string describe() const {
        std::ostringstream os;
        os << "[" << re0 << ", " << re1 << "] x i[" << im0 << ", " << im1 << "]";
        return os.str();
    }
};

struct PoleSearch {
    const PotentialProfile& profile;
    double mass, hbar;
    int max_depth;
    int base_samples;
    double k_scale;
    std::vector<cplx> roots;

    cplx residual(cplx k) const { return siegert_residual(profile, k, mass, hbar); }

    // Discrete winding number along the rectangle boundary. Returns the
    // integer count, or throws if phase tracking stays unreliable after
    // sample doubling.
    int winding(const Rect& r, int samples) const {
        for (int attempt = 0; attempt < 3; ++attempt, samples *= 2) {
            double total = 0.0;
            bool ok = true;
            cplx prev = residual({r.re0, r.im0});
            auto walk = [&](cplx from, cplx to) {
                for (int i = 1; i <= samples && ok; ++i) {
                    cplx k = from + (to - from) * (static_cast<double>(i) / samples);
                    cplx f = residual(k);
                    if (f == cplx(0.0, 0.0)) { ok = false; break; }
                    double dphi = std::arg(f / prev);
                    if (std::abs(dphi) > 0.45 * std::numbers::pi) { ok = false; break; }
                    total += dphi;
                    prev = f;
                }
            };
            cplx c00{r.re0, r.im0}, c10{r.re1, r.im0}, c11{r.re1, r.im1}, c01{r.re0, r.im1};
            walk(c00, c10); if (ok) walk(c10, c11); if (ok) walk(c11, c01); if (ok) walk(c01, c00);
            if (ok) {
                double turns = total / (2.0 * std::numbers::pi);
                long n = std::lround(turns);
                if (std::abs(turns - static_cast<double>(n)) < 0.25)
                    return static_cast<int>(n);
            }
        }
        throw unresolved_region_error(
            "find_poles: unreliable winding number on rectangle " + r.describe());
    }

    cplx newton(cplx k0) const {
        cplx k = k0;
        for (int it = 0; it < 60; ++it) {
            double h = 1e-7 * std::max(1.0, std::abs(k));
            cplx f = residual(k);
            cplx df = (residual(k + cplx(h, 0.0)) - residual(k - cplx(h, 0.0))) /
                      (2.0 * h);
            if (df == cplx(0.0, 0.0)) break;
            cplx dk = f / df;
            k -= dk;
            if (std::abs(dk) < 1e-12 * std::max(1.0, std::abs(k))) break;
        }
        return k;
    }

    void subdivide(const Rect& r, int depth) {
        int count = winding(r, base_samples);
        if (count == 0) return;
        bool small_enough = r.width() < 1e-3 * k_scale && r.height() < 1e-3 * k_scale;
        if (count == 1 && (small_enough || depth >= max_depth)) {
            cplx root = newton(r.center());
            if (!r.contains(root, 0.05 * std::max(r.width(), r.height()))) {
                if (depth >= max_depth)
                    throw unresolved_region_error(
                        "find_poles: zero count unresolved in rectangle " + r.describe());
                split(r, depth);
                return;
            }
            // Zero hugging a rectangle edge can corrupt the neighbour counts:
            // recount with doubled sampling to confirm.
            double edge_dist = std::min(
                std::min(root.real() - r.re0, r.re1 - root.real()),
                std::min(root.imag() - r.im0, r.im1 - root.imag()));
            if (edge_dist < 1e-3 * std::max(r.width(), r.height())) {
                if (winding(r, 2 * base_samples) != 1)
                    throw unresolved_region_error(
                        "find_poles: edge-hugging zero in rectangle " + r.describe());
            }
            roots.push_back(root);
            return;
        }
        if (depth >= max_depth)
            throw unresolved_region_error(
                "find_poles: zero count unresolved after max_depth in rectangle " +
                r.describe());
        split(r, depth);
    }

    void split(const Rect& r, int depth) {
        double rm = 0.5 * (r.re0 + r.re1);
        double im = 0.5 * (r.im0 + r.im1);
        subdivide({r.re0, rm, r.im0, im}, depth + 1);
        subdivide({rm, r.re1, r.im0, im}, depth + 1);
        subdivide({r.re0, rm, im, r.im1}, depth + 1);
        subdivide({rm, r.re1, im, r.im1}, depth + 1);
    }
};

} // namespace

void SearchRegion::validate() const {
    if (!(k_re_max > k_re_min) || !(k_im_max > k_im_min))
        throw validation_error("SearchRegion: empty k ranges");
    if (k_im_max > 0.0)
        throw validation_error("SearchRegion: k_im range must lie in (-inf, 0]");
    if (max_depth < 10)
        throw validation_error("SearchRegion: max_depth must be >= 10");
    if (boundary_samples < 16)
        throw validation_error("SearchRegion: boundary_samples must be >= 16");
}

int residual_winding(const PotentialProfile& profile,
                     double re_min, double re_max, double im_min, double im_max,
                     int samples_per_side, double mass, double hbar) {
    PoleSearch search{profile, mass, hbar, 30, samples_per_side,
                      std::max(std::abs(re_max), 1.0), {}};
    return search.winding({re_min, re_max, im_min, im_max}, samples_per_side);
}

std::vector<ResonancePole> find_poles(const PotentialProfile& profile,
                                      const SearchRegion& region,
                                      double mass, double hbar) {
    region.validate();
    double k_scale = std::max({std::abs(region.k_re_max), std::abs(region.k_im_min), 1.0});
    // Keep the boundary off the real axis: segment wavenumbers have branch
    // points there, and decaying poles sit strictly below it anyway.
    double im_top = std::min(region.k_im_max, -1e-9 * k_scale);

    PoleSearch search{profile, mass, hbar, region.max_depth,
                      region.boundary_samples, k_scale, {}};
    search.subdivide({region.k_re_min, region.k_re_max, region.k_im_min, im_top}, 0);

    // Dedupe roots found from adjacent rectangles.
    std::vector<cplx> unique;
    for (cplx r : search.roots) {
        bool dup = false;
        for (cplx u : unique)
            if (std::abs(r - u) < 1e-8 * k_scale) { dup = true; break; }
        if (!dup) unique.push_back(r);
    }

    std::vector<ResonancePole> poles;
    for (cplx k : unique) {
        ResonancePole p;
        p.k = k;
        p.energy = hbar * hbar * k * k / (2.0 * mass);
        p.gamma = -2.0 * p.energy.imag() / hbar;
        p.lifetime = p.gamma > 0.0 ? 1.0 / p.gamma
                                   : std::numeric_limits<double>::infinity();
        p.residual = std::abs(search.residual(k));
        poles.push_back(p);
    }
    std::sort(poles.begin(), poles.end(), [](const ResonancePole& a, const ResonancePole& b) {
        return std::abs(a.k.imag()) < std::abs(b.k.imag());
    });
    return poles;
}

std::vector<cplx> gamow_profile(const PotentialProfile& profile, cplx k,
                                const Grid1D& grid, double mass, double hbar) {
    auto seq = detail::to_steps(profile);
    const auto& segs = profile.segments();
    if (segs.empty())
        throw validation_error("gamow_profile: free profile has no resonances");
    double two_m_h2 = 2.0 * mass / (hbar * hbar);

    // Local amplitudes (a_j, b_j) at each segment start, seeded by the
    // left boundary condition: outgoing-only (0, 1) for free-standing
    // profiles, psi(0) = 0 i.e. (1, -1) for hard-wall profiles.
    cplx a = seq.hard_wall ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    cplx b = seq.hard_wall ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);

    struct SegAmp { double x0, x1; cplx q, a, b; };
    std::vector<SegAmp> amps;
    cplx q_prev = k;
    for (std::size_t j = 0; j < segs.size(); ++j) {
        cplx q = std::sqrt(k * k - two_m_h2 * segs[j].value);
        if (j == 0 && seq.hard_wall) {
            q_prev = q; // amplitudes already expressed in the first medium
        } else {
            cplx r = q_prev / q;
            cplx a2 = 0.5 * ((1.0 + r) * a + (1.0 - r) * b);
            cplx b2 = 0.5 * ((1.0 - r) * a + (1.0 + r) * b);
            a = a2; b = b2;
        }
        amps.push_back({segs[j].x_start, segs[j].x_end, q, a, b});
        double w = segs[j].x_end - segs[j].x_start;
        cplx e = std::exp(cplx(0.0, 1.0) * q * w);
        a *= e;
        b /= e;
        q_prev = q;
    }
    // right asymptotic region: interface to q = k
    {
        cplx r = q_prev / k;
        cplx a2 = 0.5 * ((1.0 + r) * a + (1.0 - r) * b);
        cplx b2 = 0.5 * ((1.0 - r) * a + (1.0 + r) * b);
        a = a2; b = b2;
    }
    double x_left = segs.front().x_start;
    double x_right = segs.back().x_end;
    cplx b_left = seq.hard_wall ? cplx(0.0, 0.0) : cplx(1.0, 0.0);

    std::vector<cplx> psi(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        double x = grid.x(i);
        if (x < x_left) {
            psi[i] = b_left * std::exp(cplx(0.0, -1.0) * k * (x - x_left));
        } else if (x >= x_right) {
            psi[i] = a * std::exp(cplx(0.0, 1.0) * k * (x - x_right));
        } else {
            for (const auto& s : amps) {
                if (x >= s.x0 && (x < s.x1 || &s == &amps.back())) {
                    cplx ph = std::exp(cplx(0.0, 1.0) * s.q * (x - s.x0));
                    psi[i] = s.a * ph + s.b / ph;
                    break;
                }
            }
        }
    }
    return psi;
}

WaveState gamow_state(const PotentialProfile& profile, const ResonancePole& pole,
                      const Grid1D& grid, double mass, double hbar) {
    if (pole.residual > 1e-10)
        throw validation_error("gamow_state: pole residual exceeds 1e-10");
    auto psi = gamow_profile(profile, pole.k, grid, mass, hbar);

    // Unit norm over the interior (non-asymptotic) region.
    double lo = std::max(profile.interior_min(), grid.x_min);
    double hi = std::min(profile.interior_max(), grid.x_max);
    std::size_t ia = grid.index_near(lo), ib = grid.index_near(hi);
    std::vector<double> dens;
    dens.reserve(ib - ia + 1);
    for (std::size_t i = ia; i <= ib; ++i) dens.push_back(std::norm(psi[i]));
    double nrm = std::sqrt(trapezoid(dens, grid.dx));
    if (!(nrm > 0.0))
        throw numerical_error("gamow_state: vanishing interior norm");

    WaveState st;
    st.grid = grid;
    st.mass = mass;
    st.hbar = hbar;
    st.re.resize(grid.n_points);
    st.im.resize(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        st.re[i] = psi[i].real() / nrm;
        st.im[i] = psi[i].imag() / nrm;
    }
    return st;
}

std::pair<double, double> pole_to_rate(cplx k, double mass, double hbar) {
    if (k.imag() > 0.0)
        throw validation_error("pole_to_rate: Im(k) > 0 is not a decaying pole");
    cplx energy = hbar * hbar * k * k / (2.0 * mass);
    double gamma = -2.0 * energy.imag() / hbar;
    double lifetime = gamma > 0.0 ? 1.0 / gamma
                                  : std::numeric_limits<double>::infinity();
    return {gamma, lifetime};
}

} // namespace leakycav
