#pragma once

#include <cmath>
#include <numbers>

#include "sievebound/errors.hpp"

namespace sievebound {

// Constants of the 1- and 2-dimensional beta sieve.  A2 and beta2 are
// truncated decimals taken as given; they are instance fields rather than
// globals so that sensitivity to them can be probed.
struct SieveConstants {
    double gamma = std::numbers::egamma;                  // Euler-Mascheroni
    double a1 = 2.0 * std::exp(std::numbers::egamma);     // A1 = 2 e^gamma
    double a2 = 43.496;                                   // A2, dimension 2
    double beta2 = 4.8333;                                // sifting limit, dim 2
};

// Lower-bound function f1(s) = A1 s^-1 log(s-1), explicit only on [2, 4].
inline double lower_f1(const SieveConstants& c, double s) {
    if (!(s >= 2.0 && s <= 4.0))
        throw RangeUnavailable("lower_f1: explicit form requires 2 <= s <= 4");
    return c.a1 * std::log(s - 1.0) / s;
}

// Upper-bound function F1(s) = A1 / s, explicit for 0 < s <= 3.
inline double upper_F1(const SieveConstants& c, double s) {
    if (!(s > 0.0 && s <= 3.0))
        throw RangeUnavailable("upper_F1: explicit form requires 0 < s <= 3");
    return c.a1 / s;
}

// Upper-bound function F2(s) = A2 / s^2, explicit for 0 < s <= beta2 + 1.
inline double upper_F2(const SieveConstants& c, double s) {
    if (!(s > 0.0 && s <= c.beta2 + 1.0))
        throw RangeUnavailable("upper_F2: explicit form requires 0 < s <= beta2+1");
    return c.a2 / (s * s);
}

}  // namespace sievebound
