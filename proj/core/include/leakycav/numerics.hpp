#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace leakycav {

using cplx = std::complex<double>;

// Adaptive Simpson quadrature. `rel_tol` applies to the running estimate of
// the whole integral; recursion also stops below `abs_floor`.
double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b,
                          double rel_tol = 1e-10,
                          int max_depth = 48);

// Cauchy principal value of  integral g(w)/(w - w0) dw  over [a, b] with
// a < w0 < b. The symmetric window around w0 is integrated as
// (g(w0+u) - g(w0-u))/u, which is regular at u = 0.
double principal_value(const std::function<double(double)>& g,
                       double a, double b, double w0,
                       double rel_tol = 1e-8);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Trapezoid integral of uniformly sampled values with spacing dx.
double trapezoid(std::span<const double> y, double dx);

inline bool nearly_equal(double a, double b, double rel, double abs_floor = 0.0) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(rel * scale, abs_floor);
}

} // namespace leakycav
