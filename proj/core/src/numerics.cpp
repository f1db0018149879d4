#include "leakycav/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "leakycav/errors.hpp"

namespace leakycav {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f,
             double a, double fa, double b, double fb, double fm,
             double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, fa, m, fm, flm);
    double right = simpson(m, fm, b, fb, frm);
    double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol) {
        return left + right + err / 15.0;
    }
    return adapt(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b, double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(a, fa, b, fb, fm);
    // Coarse magnitude estimate so rel_tol has something to bite on even
    // when the integral nearly cancels.
    double scale = std::abs(whole);
    {
        const int n = 16;
        double s = 0.0, h = (b - a) / n;
        for (int i = 0; i < n; ++i) s += std::abs(f(a + (i + 0.5) * h)) * std::abs(h);
        scale = std::max(scale, 1e-3 * s);
    }
    double tol = rel_tol * std::max(scale, 1e-300);
    return adapt(f, a, fa, b, fb, fm, whole, tol, max_depth);
}

double principal_value(const std::function<double(double)>& g,
                       double a, double b, double w0, double rel_tol) {
    if (!(a < w0 && w0 < b))
        throw validation_error("principal_value: w0 must lie strictly inside [a, b]");
    double u_max = std::min(w0 - a, b - w0);
    // Symmetric window: integrand (g(w0+u)-g(w0-u))/u extended continuously
    // to u=0 by the derivative.
    auto sym = [&](double u) {
        if (u < 1e-14 * u_max) {
            double h = std::max(1e-7 * u_max, 1e-300);
            return (g(w0 + h) - g(w0 - h)) / h;
        }
        return (g(w0 + u) - g(w0 - u)) / u;
    };
    double val = integrate_adaptive(sym, 0.0, u_max, rel_tol);
    // Remainder outside the symmetric window is an ordinary integral.
    if (b - w0 > u_max) {
        val += integrate_adaptive([&](double w) { return g(w) / (w - w0); },
                                  w0 + u_max, b, rel_tol);
    }
    if (w0 - a > u_max) {
        val += integrate_adaptive([&](double w) { return g(w) / (w - w0); },
                                  a, w0 - u_max, rel_tol);
    }
    return val;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw validation_error("fit_line: need at least two matching samples");
    const std::size_t n = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw validation_error("fit_line: degenerate abscissae");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

double trapezoid(std::span<const double> y, double dx) {
    if (y.size() < 2) return 0.0;
    double s = 0.5 * (y.front() + y.back());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
    return s * dx;
}

} // namespace leakycav
