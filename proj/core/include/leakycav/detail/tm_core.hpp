#pragma once

// Transfer-matrix core shared by the double-precision path and the
// extended-precision (MPFR) path used for ultra-narrow resonances.
// The complex scalar C must provide the free functions
//   tm_sqrt(C), tm_exp(C), tm_abs(C) -> double-ish, tm_make(double, double),
// plus the usual arithmetic.

#include <cmath>
#include <utility>
#include <vector>

namespace leakycav::detail {

template <class C>
struct TmMat {
    C m11, m12, m21, m22;
    double log_scale = 0.0;
    bool rescaled = false;
};

// q = sqrt(k^2 - 2mV/hbar^2), principal branch: continuous in the lower
// half k-plane and reducing to k in free space.
template <class C>
C segment_wavenumber(const C& k, double v, double two_m_over_h2) {
    return tm_sqrt(k * k - tm_make(two_m_over_h2 * v, 0.0));
}

template <class C>
void left_multiply(TmMat<C>& m, const C& a11, const C& a12, const C& a21, const C& a22) {
    C n11 = a11 * m.m11 + a12 * m.m21;
    C n12 = a11 * m.m12 + a12 * m.m22;
    C n21 = a21 * m.m11 + a22 * m.m21;
    C n22 = a21 * m.m12 + a22 * m.m22;
    m.m11 = n11; m.m12 = n12; m.m21 = n21; m.m22 = n22;
}

// Builds the full matrix for steps (V_j, w_j) between equal asymptotic
// potentials V = 0. Rescales whenever entries grow past 1e120.
template <class C>
TmMat<C> transfer_entries(const std::vector<std::pair<double, double>>& steps,
                          const C& k, double two_m_over_h2) {
    TmMat<C> m{tm_make(1.0, 0.0), tm_make(0.0, 0.0),
               tm_make(0.0, 0.0), tm_make(1.0, 0.0)};
    C half = tm_make(0.5, 0.0);
    C q_prev = k;
    for (const auto& [v, w] : steps) {
        C q = segment_wavenumber(k, v, two_m_over_h2);
        // interface q_prev -> q
        C r = q_prev / q;
        C ip = half * (tm_make(1.0, 0.0) + r);
        C im = half * (tm_make(1.0, 0.0) - r);
        left_multiply(m, ip, im, im, ip);
        // propagation across width w; split off the growing magnitude when
        // the segment is strongly evanescent
        C iqw = tm_make(0.0, 1.0) * q * tm_make(w, 0.0);
        double g = tm_abs_imag(q) * w; // |Im(q)| * w
        if (g > 300.0) {
            m.rescaled = m.rescaled || g > 700.0;
            C ep = tm_exp(iqw - tm_make(g, 0.0));
            C em = tm_exp((tm_make(0.0, 0.0) - iqw) - tm_make(g, 0.0));
            left_multiply(m, ep, tm_make(0.0, 0.0), tm_make(0.0, 0.0), em);
            m.log_scale += g;
        } else {
            C ep = tm_exp(iqw);
            C em = tm_exp(tm_make(0.0, 0.0) - iqw);
            left_multiply(m, ep, tm_make(0.0, 0.0), tm_make(0.0, 0.0), em);
        }
        double big = std::max(std::max(tm_abs(m.m11), tm_abs(m.m12)),
                              std::max(tm_abs(m.m21), tm_abs(m.m22)));
        if (big > 1e120) {
            double lg = std::log(big);
            C inv = tm_make(1.0 / big, 0.0);
            m.m11 = m.m11 * inv; m.m12 = m.m12 * inv;
            m.m21 = m.m21 * inv; m.m22 = m.m22 * inv;
            m.log_scale += lg;
        }
        q_prev = q;
    }
    // interface back to the right asymptotic region (V = 0)
    C r = q_prev / k;
    C ip = half * (tm_make(1.0, 0.0) + r);
    C im = half * (tm_make(1.0, 0.0) - r);
    left_multiply(m, ip, im, im, ip);
    return m;
}

template <class C>
C residual_from_matrix(const TmMat<C>& m, bool hard_wall) {
    // Free-standing: outgoing-only means a_left = 0, b_right = 0 -> M22 = 0.
    // Hard wall at origin: psi(0) = 0 means (a, b) = (1, -1) -> M21 - M22 = 0.
    if (hard_wall) return m.m21 - m.m22;
    return m.m22;
}

} // namespace leakycav::detail
