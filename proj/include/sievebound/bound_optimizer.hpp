#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "sievebound/errors.hpp"
#include "sievebound/quadrature.hpp"
#include "sievebound/sieve_functions.hpp"

namespace sievebound {

// Scaled sieve parameters: alpha0 = k*alpha, delta0 = k*delta, beta0 = k*beta.
struct BoundParams {
    int k = 2;
    double alpha0 = 0.125;
    double delta0 = 0.456;
    double beta0 = 0.6;
};

struct BoundResult {
    int k = 0;
    double beta0_opt = 0.0;
    double r_real = 0.0;
    int r_int = 0;              // smallest integer strictly greater than r_real
    bool constraint_ok = false;  // beta0/k > 1/(r_int + 1)
};

// Root in [0, 1/2) of 2 A1 (1-d)^2 = e^{-gamma} A2 (1-2d).  With
// T = e^{-gamma} A2 / (2 A1) the equation is d^2 + (2T-2) d + (1-T) = 0,
// whose smaller-branch root is 1 - T + sqrt(T^2 - T).
inline double solve_delta0(const SieveConstants& c) {
    const double t = std::exp(-c.gamma) * c.a2 / (2.0 * c.a1);
    double disc = t * t - t;
    if (disc < 0.0 && disc > -64.0 * (t * t + 1.0) * std::numeric_limits<double>::epsilon())
        disc = 0.0;  // T = 1 up to rounding: the quadratic degenerates to d^2 = 0
    if (disc < 0.0)
        throw NoRootInRange("solve_delta0: quadratic has no real root in [0, 1/2)");
    double root = 1.0 - t + std::sqrt(disc);
    if (root < 0.0 && root > -1e-9) root = 0.0;
    if (!(root >= 0.0 && root < 0.5))
        throw NoRootInRange("solve_delta0: no root in [0, 1/2)");
    return root;
}

// Closed form of int_{alpha0}^{delta0} (1/s - 1/beta0) ds/(1-2s).  Partial
// fractions 1/(s(1-2s)) = 1/s + 2/(1-2s) give the antiderivative
// log(s/(1-2s)) + log(1-2s)/(2 beta0).
inline double integral_one(double alpha0, double delta0, double beta0) {
    if (!(alpha0 > 0.0 && alpha0 <= delta0 && delta0 < 0.5))
        throw DomainError("integral_one: need 0 < alpha0 <= delta0 < 1/2");
    if (!(beta0 > 0.0))
        throw DomainError("integral_one: need beta0 > 0");
    const auto anti = [beta0](double s) {
        return std::log(s / (1.0 - 2.0 * s)) + std::log(1.0 - 2.0 * s) / (2.0 * beta0);
    };
    return anti(delta0) - anti(alpha0);
}

// Closed form of int_{delta0}^{beta0} (1/s - 1/beta0) ds/(1-s)^2 via
// 1/(s(1-s)^2) = 1/s + 1/(1-s) + 1/(1-s)^2; the antiderivative is
// log(s/(1-s)) + (1 - 1/beta0)/(1-s).
inline double integral_two(double delta0, double beta0) {
    if (!(delta0 > 0.0 && delta0 <= beta0 && beta0 < 1.0))
        throw DomainError("integral_two: need 0 < delta0 <= beta0 < 1");
    const auto anti = [beta0](double s) {
        return std::log(s / (1.0 - s)) + (1.0 - 1.0 / beta0) / (1.0 - s);
    };
    return anti(beta0) - anti(delta0);
}

// r(k, beta0) with alpha0 fixed at 1/8 and delta0 at the optimal crossover:
//   k/beta0 - 1 + (2 A1 I1 + e^{-gamma} A2 I2) / (2 A1 log 3).
inline double r_bound(int k, double beta0, const SieveConstants& c = {}) {
    if (k < 2) throw DomainError("r_bound: need k >= 2");
    const double alpha0 = 0.125;
    const double d0 = solve_delta0(c);
    if (!(beta0 > d0 && beta0 < 1.0))
        throw DomainError("r_bound: beta0 must lie in (delta0, 1)");
    // Explicit sieve forms are valid only while (1-2a0)/(2a0) <= 3 and
    // (1-d0)/a0 <= beta2+1.
    if ((1.0 - 2.0 * alpha0) / (2.0 * alpha0) > 3.0)
        throw RangeUnavailable("r_bound: (1-2a0)/(2a0) exceeds the F1 range");
    if ((1.0 - d0) / alpha0 > c.beta2 + 1.0)
        throw RangeUnavailable("r_bound: (1-d0)/a0 exceeds the F2 range");
    const double i1 = integral_one(alpha0, d0, beta0);
    const double i2 = integral_two(d0, beta0);
    const double denom = 2.0 * c.a1 * std::log(1.0 / (2.0 * alpha0) - 1.0);
    return k / beta0 - 1.0 +
           (2.0 * c.a1 * i1 + std::exp(-c.gamma) * c.a2 * i2) / denom;
}

// Full bound before the alpha0 = 1/8 specialisation, evaluated by quadrature
// of the explicit sieve functions.  theta1_hat = 2k*theta1 and
// theta2_hat = k*theta2; both default to their open-boundary limit 1.
inline double r_bound_general(const BoundParams& p, double theta1_hat = 1.0,
                              double theta2_hat = 1.0,
                              const SieveConstants& c = {}) {
    if (!(p.alpha0 > 0.0 && p.alpha0 < p.delta0 && p.delta0 < p.beta0 &&
          p.beta0 < 1.0 && p.delta0 < 0.5))
        throw DomainError("r_bound_general: need 0 < a0 < d0 < b0 < 1, d0 < 1/2");
    const double f1v = lower_f1(c, theta1_hat / (2.0 * p.alpha0));
    const auto g1 = [&](double s) {
        return (1.0 / s - 1.0 / p.beta0) *
               upper_F1(c, (theta1_hat - 2.0 * s) / (2.0 * p.alpha0));
    };
    const auto g2 = [&](double s) {
        return (1.0 / s - 1.0 / p.beta0) *
               upper_F2(c, (theta2_hat - s) / p.alpha0);
    };
    const double i1 = integrate(g1, p.alpha0, p.delta0, 1e-12);
    const double i2 = integrate(g2, p.delta0, p.beta0, 1e-12);
    return p.k / p.beta0 - 1.0 +
           (i1 + std::exp(-c.gamma) / p.alpha0 * i2) / f1v;
}

namespace detail {

template <class F>
double golden_min(F& f, double a, double b, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// Grid scan guards against non-unimodality, then golden-section refines
// inside the bracketing cell.
template <class F>
std::pair<double, double> scan_then_golden(F f, double lo, double hi, double tol) {
    constexpr int kGrid = 64;
    int best = 0;
    double best_val = f(lo);
    for (int i = 1; i < kGrid; ++i) {
        const double x = lo + (hi - lo) * i / (kGrid - 1);
        const double v = f(x);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = lo + (hi - lo) * std::max(0, best - 1) / (kGrid - 1);
    const double b = lo + (hi - lo) * std::min(kGrid - 1, best + 1) / (kGrid - 1);
    const double x = golden_min(f, a, b, tol);
    return {x, f(x)};
}

}  // namespace detail

// Minimise r_bound(k, .) over beta0 in (delta0, 1), then pick the smallest
// admissible integer r.  If the unconstrained minimiser violates
// beta0/k > 1/(r+1), the search is repeated on the feasible subinterval.
inline BoundResult minimize_r(int k, const SieveConstants& c = {}) {
    if (k < 2) throw DomainError("minimize_r: need k >= 2");
    const double d0 = solve_delta0(c);
    const auto objective = [&](double b0) { return r_bound(k, b0, c); };
    double lo = d0 + 1e-9;
    const double hi = 1.0 - 1e-9;
    for (int pass = 0; pass < 32; ++pass) {
        if (!(lo < hi))
            throw Infeasible("minimize_r: empty feasible beta0 interval");
        const auto [b0, r_real] = detail::scan_then_golden(objective, lo, hi, 1e-6);
        const int r_int = static_cast<int>(std::floor(r_real)) + 1;
        if (b0 / k > 1.0 / (r_int + 1.0))
            return BoundResult{k, b0, r_real, r_int, true};
        const double need = k / (r_int + 1.0) + 1e-9;
        if (need <= lo)
            throw Infeasible("minimize_r: constraint cannot be satisfied");
        lo = need;
    }
    throw Infeasible("minimize_r: constraint iteration did not settle");
}

// c = e^{-2 gamma} A2 / (4 log 3); equals e^{-gamma} A2 / (2 A1 log 3) when
// A1 = 2 e^gamma.
inline double asymptotic_constant(const SieveConstants& c = {}) {
    return std::exp(-2.0 * c.gamma) * c.a2 / (4.0 * std::log(3.0));
}

// Residual r(k, 1 - 1/k) - k - c log k; stays bounded as k grows.
inline double large_k_profile(int k, const SieveConstants& c = {}) {
    if (k < 3) throw DomainError("large_k_profile: need k >= 3");
    const double beta0 = 1.0 - 1.0 / static_cast<double>(k);
    return r_bound(k, beta0, c) - k - asymptotic_constant(c) * std::log(static_cast<double>(k));
}

}  // namespace sievebound
