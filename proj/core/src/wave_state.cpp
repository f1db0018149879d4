#include "leakycav/wave_state.hpp"

#include <cmath>

#include "leakycav/errors.hpp"
#include "leakycav/numerics.hpp"

namespace leakycav {

std::complex<double> WaveState::psi(std::size_t i) const {
    double im_c = staggered() ? 0.5 * (im[i] + im_prev[i]) : im[i];
    return {re[i], im_c};
}

double WaveState::density(std::size_t i) const {
    if (staggered())
        return re[i] * re[i] + im[i] * im_prev[i];
    return re[i] * re[i] + im[i] * im[i];
}

double WaveState::norm_total() const {
    return norm_between(grid.x_min, grid.x_max);
}

double WaveState::norm_between(double a, double b) const {
    std::size_t ia = grid.index_near(a);
    std::size_t ib = grid.index_near(b);
    if (ib <= ia) throw validation_error("norm_between: empty interval");
    double s = 0.5 * (density(ia) + density(ib));
    for (std::size_t i = ia + 1; i < ib; ++i) s += density(i);
    return s * grid.dx;
}

WaveState init_gaussian(const Grid1D& grid, double x0, double sigma,
                        double k_mean, double mass, double hbar) {
    if (!(sigma > 0.0))
        throw validation_error("init_gaussian: sigma must be positive");
    if (!grid.contains(x0))
        throw validation_error("init_gaussian: x0 outside grid");

    // Relative envelope at the edges; the packet must be negligible there.
    double tail = std::max(
        std::exp(-(grid.x_min - x0) * (grid.x_min - x0) / (4.0 * sigma * sigma)),
        std::exp(-(grid.x_max - x0) * (grid.x_max - x0) / (4.0 * sigma * sigma)));
    if (tail > 1e-8)
        throw validation_error(
            "init_gaussian: packet tail exceeds 1e-8 at the domain edge");

    WaveState st;
    st.grid = grid;
    st.mass = mass;
    st.hbar = hbar;
    st.re.resize(grid.n_points);
    st.im.resize(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        double x = grid.x(i);
        double env = std::exp(-(x - x0) * (x - x0) / (4.0 * sigma * sigma));
        st.re[i] = env * std::cos(k_mean * x);
        st.im[i] = env * std::sin(k_mean * x);
    }
    std::vector<double> dens(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i)
        dens[i] = st.re[i] * st.re[i] + st.im[i] * st.im[i];
    double norm = std::sqrt(trapezoid(dens, grid.dx));
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        st.re[i] /= norm;
        st.im[i] /= norm;
    }
    return st;
}

} // namespace leakycav
