#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

namespace leakycav {

// Minimal fixed-precision MPFR real, value semantics. 256 bits (about 77
// decimal digits) is enough headroom for Siegert residuals whose zeros sit
// ~35 decades below the working scale.
class BigFloat {
public:
    static constexpr mpfr_prec_t precision = 256;

    BigFloat() { mpfr_init2(v_, precision); mpfr_set_zero(v_, 1); }
    explicit BigFloat(double x) { mpfr_init2(v_, precision); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, precision); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, precision); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r; mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r; mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r; mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r; mpfr_log(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat log10(const BigFloat& a) {
        BigFloat r; mpfr_log10(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r; mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r; mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r; mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN); return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i) : re(r), im(i) {}
    explicit BigComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }

    // principal square root via polar form
    friend BigComplex sqrt(const BigComplex& a) {
        BigFloat r = hypot(a.re, a.im);
        if (r.is_zero()) return {BigFloat(), BigFloat()};
        BigFloat half(0.5);
        BigFloat theta = atan2(a.im, a.re) * half;
        BigFloat rr = sqrt(r);
        return {rr * cos(theta), rr * sin(theta)};
    }
    friend BigComplex exp(const BigComplex& a) {
        BigFloat m = exp(a.re);
        return {m * cos(a.im), m * sin(a.im)};
    }
};

} // namespace leakycav
