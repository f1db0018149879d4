#include "leakycav/transfer_matrix.hpp"

#include <cmath>

#include "leakycav/errors.hpp"

// double-precision shims for the templated core
namespace leakycav::detail {
inline std::complex<double> tm_make(double re, double im) { return {re, im}; }
inline std::complex<double> tm_sqrt(const std::complex<double>& z) { return std::sqrt(z); }
inline std::complex<double> tm_exp(const std::complex<double>& z) { return std::exp(z); }
inline double tm_abs(const std::complex<double>& z) { return std::abs(z); }
inline double tm_abs_imag(const std::complex<double>& z) { return std::abs(z.imag()); }
} // namespace leakycav::detail

#include "leakycav/detail/tm_core.hpp"

namespace leakycav {

namespace detail {

StepSequence to_steps(const PotentialProfile& profile) {
    if (!profile.piecewise_constant())
        throw validation_error("transfer_matrix: profile must be piecewise constant");
    StepSequence seq;
    seq.hard_wall = profile.hard_wall_at_origin();
    const auto& segs = profile.segments();
    if (!segs.empty()) seq.x_first = segs.front().x_start;
    seq.steps.reserve(segs.size());
    for (const auto& s : segs)
        seq.steps.emplace_back(s.value, s.x_end - s.x_start);
    return seq;
}

} // namespace detail

TransferMatrix transfer_matrix(const PotentialProfile& profile,
                               std::complex<double> k, double mass, double hbar) {
    auto seq = detail::to_steps(profile);
    auto m = detail::transfer_entries(seq.steps, k, 2.0 * mass / (hbar * hbar));
    TransferMatrix out;
    out.m11 = m.m11; out.m12 = m.m12; out.m21 = m.m21; out.m22 = m.m22;
    out.k = k;
    out.log_scale = m.log_scale;
    out.rescaled = m.rescaled;
    return out;
}

std::complex<double> TransferMatrix::det() const {
    return (m11 * m22 - m12 * m21) * std::exp(2.0 * log_scale);
}

std::complex<double> siegert_residual(const PotentialProfile& profile,
                                      std::complex<double> k, double mass, double hbar) {
    auto seq = detail::to_steps(profile);
    auto m = detail::transfer_entries(seq.steps, k, 2.0 * mass / (hbar * hbar));
    auto r = detail::residual_from_matrix(m, seq.hard_wall);
    if (m.log_scale != 0.0) {
        if (m.log_scale > 690.0)
            throw numerical_error("siegert_residual: scale overflow in double precision");
        r *= std::exp(m.log_scale);
    }
    return r;
}

std::pair<std::complex<double>, std::complex<double>>
scattering_amplitudes(const PotentialProfile& profile, double k, double mass, double hbar) {
    auto m = transfer_matrix(profile, {k, 0.0}, mass, hbar);
    // incident a0 = 1 from the left, no incoming wave from the right:
    // b_right = 0 -> r = -M21/M22, t = det/M22 (the scale cancels in both).
    std::complex<double> refl = -m.m21 / m.m22;
    std::complex<double> trans =
        (m.m11 * m.m22 - m.m12 * m.m21) / m.m22 * std::exp(m.log_scale);
    return {trans, refl};
}

} // namespace leakycav
