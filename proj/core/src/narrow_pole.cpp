#include "leakycav/narrow_pole.hpp"

#include <cmath>
#include <limits>

#include "leakycav/errors.hpp"
#include "leakycav/mp_complex.hpp"
#include "leakycav/transfer_matrix.hpp"

// BigComplex shims for the templated transfer-matrix core
namespace leakycav::detail {
inline BigComplex tm_make(double re, double im) { return {re, im}; }
inline BigComplex tm_sqrt(const BigComplex& z) { return sqrt(z); }
inline BigComplex tm_exp(const BigComplex& z) { return exp(z); }
inline double tm_abs(const BigComplex& z) { return abs(z).to_double(); }
inline double tm_abs_imag(const BigComplex& z) { return std::abs(z.im.to_double()); }
} // namespace leakycav::detail

#include "leakycav/detail/tm_core.hpp"

namespace leakycav {

namespace {

BigComplex big_residual(const detail::StepSequence& seq, const BigComplex& k,
                        double two_m_h2) {
    auto m = detail::transfer_entries(seq.steps, k, two_m_h2);
    BigComplex r = detail::residual_from_matrix(m, seq.hard_wall);
    if (m.log_scale != 0.0) {
        // Restore the split-off scale so nearby evaluations stay comparable;
        // MPFR has no trouble with exp(several hundred).
        BigFloat s = exp(BigFloat(m.log_scale));
        r = BigComplex{r.re * s, r.im * s};
    }
    return r;
}

} // namespace

NarrowPoleResult narrow_pole(const PotentialProfile& profile,
                             std::complex<double> k_seed,
                             double mass, double hbar, int max_iterations) {
    if (k_seed.imag() >= 0.0)
        throw validation_error("narrow_pole: seed must have Im(k) < 0");
    auto seq = detail::to_steps(profile);
    const double two_m_h2 = 2.0 * mass / (hbar * hbar);

    BigComplex k(k_seed);
    const BigFloat tol(1e-45);
    const BigFloat hrel(1e-12);
    int it = 0;
    BigComplex f = big_residual(seq, k, two_m_h2);
    for (; it < max_iterations; ++it) {
        BigFloat h = hrel * abs(k);
        BigComplex dk_h(h, BigFloat());
        BigComplex fp = big_residual(seq, k + dk_h, two_m_h2);
        BigComplex fm = big_residual(seq, k - dk_h, two_m_h2);
        BigComplex df = (fp - fm) / (dk_h + dk_h);
        if (abs(df).is_zero())
            throw numerical_error("narrow_pole: vanishing residual derivative");
        BigComplex step = f / df;
        k = k - step;
        f = big_residual(seq, k, two_m_h2);
        if (abs(step) < tol * abs(k)) { ++it; break; }
    }
    if (it >= max_iterations)
        throw numerical_error("narrow_pole: Newton did not converge");

    NarrowPoleResult out;
    out.k = k.to_complex();
    // Gamma = -2 Im(E)/hbar with E = hbar^2 k^2/(2m), and Im(k^2) is exactly
    // 2 Re(k) Im(k), so Gamma = -2 hbar Re(k) Im(k) / m. Formed in extended
    // precision before rounding: |Im k| can sit far below eps * |Re k|.
    BigFloat gamma_big = BigFloat(-2.0 * hbar / mass) * k.re * k.im;
    out.gamma = gamma_big.to_double();
    out.lifetime = out.gamma > 0.0 ? 1.0 / out.gamma
                                   : std::numeric_limits<double>::infinity();
    BigFloat fa = abs(f);
    out.residual_log10 = fa.is_zero() ? -400.0 : log10(fa).to_double();
    out.iterations = it;
    return out;
}

double quasibound_detector(const PotentialProfile& profile, double energy,
                           double mass, double hbar) {
    if (!profile.piecewise_constant())
        throw validation_error("quasibound_detector: profile must be piecewise constant");
    if (!profile.hard_wall_at_origin())
        throw validation_error("quasibound_detector: requires a hard-wall profile");
    const auto& segs = profile.segments();
    const double two_m_h2 = 2.0 * mass / (hbar * hbar);

    double u = 0.0, du = 1.0;
    double g_last = 0.0;
    bool saw_forbidden = false;
    for (const auto& s : segs) {
        double w = s.x_end - s.x_start;
        double q2 = two_m_h2 * (energy - s.value);
        if (q2 > 0.0) {
            double q = std::sqrt(q2);
            double c = std::cos(q * w), sn = std::sin(q * w);
            double u2 = u * c + du / q * sn;
            double du2 = -u * q * sn + du * c;
            u = u2; du = du2;
        } else {
            double kp = std::sqrt(-q2);
            // growing coefficient at the segment entrance, normalized
            double p = 0.5 * (u + du / kp);
            double m = 0.5 * (u - du / kp);
            double scale = std::hypot(p, m);
            if (scale > 0.0) {
                g_last = p / scale;
                saw_forbidden = true;
            }
            // propagate with overflow-safe renormalization
            double e = std::exp(std::min(kp * w, 600.0));
            double u2 = p * e + m / e;
            double du2 = kp * (p * e - m / e);
            u = u2; du = du2;
        }
        double nrm = std::max(std::abs(u), std::abs(du));
        if (nrm > 1e100) { u /= nrm; du /= nrm; }
    }
    if (!saw_forbidden)
        throw validation_error("quasibound_detector: no classically forbidden segment");
    return g_last;
}

double quasibound_energy(const PotentialProfile& profile,
                         double e_min, double e_max, double mass, double hbar) {
    const int n_scan = 400;
    double prev_e = e_min;
    double prev_g = quasibound_detector(profile, e_min, mass, hbar);
    for (int i = 1; i <= n_scan; ++i) {
        double e = e_min + (e_max - e_min) * i / n_scan;
        double g = quasibound_detector(profile, e, mass, hbar);
        if (prev_g == 0.0) return prev_e;
        if (g == 0.0) return e;
        if ((prev_g < 0.0) != (g < 0.0)) {
            double lo = prev_e, hi = e, glo = prev_g;
            for (int b = 0; b < 200; ++b) {
                double mid = 0.5 * (lo + hi);
                double gm = quasibound_detector(profile, mid, mass, hbar);
                if (gm == 0.0) return mid;
                if ((gm < 0.0) == (glo < 0.0)) { lo = mid; glo = gm; }
                else hi = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_e = e; prev_g = g;
    }
    throw numerical_error("quasibound_energy: no quasibound level in the window");
}

} // namespace leakycav
