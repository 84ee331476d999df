#pragma once

// Test-side quadrature oracles, deliberately independent of the library
// implementation: recursive adaptive Simpson instead of Gauss-Kronrod,
// plus a substitution wrapper for half-line integrals. Expected values
// frozen in the tests were produced by these routines.

#include <cmath>
#include <functional>

namespace oracle {

using Fn = std::function<double(double)>;

namespace detail {

inline double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

inline double adapt(const Fn& f, double a, double m, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth,
                    int force) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    // The forced levels guard against narrow features that the first
    // few sample points miss entirely.
    if (force <= 0 && (depth <= 0 || std::fabs(delta) <= 15.0 * tol))
        return left + right + delta / 15.0;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1,
                 force - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1,
                 force - 1);
}

}  // namespace detail

/// Adaptive Simpson integral of f over [a,b] with absolute tolerance.
inline double integrate(const Fn& f, double a, double b, double tol = 1e-11) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = detail::simpson(fa, fm, fb, b - a);
    return detail::adapt(f, a, m, b, fa, fm, fb, whole, tol, 48, 8);
}

/// Half-line integral via t = u/(1-u).
inline double integrate_half_line(const Fn& f, double tol = 1e-11) {
    auto g = [&f](double u) {
        const double om = 1.0 - u;
        return f(u / om) / (om * om);
    };
    return integrate(g, 0.0, 1.0 - 1e-12, tol);
}

/// Nested 2-D integral over [ax,bx] x [ay,by].
inline double integrate_2d(const std::function<double(double, double)>& f,
                           double ax, double bx, double ay, double by,
                           double tol = 1e-9) {
    auto outer = [&](double x) {
        return integrate([&](double y) { return f(x, y); }, ay, by, tol * 0.1);
    };
    return integrate(outer, ax, bx, tol);
}

/// Standard normal density, local to the oracle.
inline double phi_pdf(double x) {
    return 0.3989422804014326779 * std::exp(-0.5 * x * x);
}

/// Gaussian tail by quadrature of the density (not via erfc).
inline double q_tail(double x) {
    if (x < 0.0) return 1.0 - q_tail(-x);
    return integrate([](double t) { return phi_pdf(t); }, x, 42.0, 1e-13);
}

/// Gaussian CDF by quadrature, tail-safe on both sides.
inline double phi_cdf(double x) { return q_tail(-x); }

}  // namespace oracle
