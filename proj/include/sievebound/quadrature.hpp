#pragma once

#include <cmath>

namespace sievebound {

namespace detail {

template <class F>
double adapt_simpson(F& f, double a, double b, double fa, double fb, double fm,
                     double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt_simpson(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           adapt_simpson(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
template <class F>
double integrate(F f, double a, double b, double tol = 1e-12, int max_depth = 60) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adapt_simpson(f, a, b, fa, fb, fm, whole, tol, max_depth);
}

}  // namespace sievebound
