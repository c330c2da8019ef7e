#pragma once

// Independent oracles used by the unit and acceptance suites.  Everything
// here is deliberately naive (trial division, direct enumeration) so it
// shares no code path with the implementations it checks.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include <sievebound/polynomial.hpp>

namespace oracles {

using u64 = std::uint64_t;

// Factor multiset of n by pure trial division.
inline std::map<u64, int> trial_division_factors(u64 n) {
    std::map<u64, int> factors;
    while (n % 2 == 0) {
        ++factors[2];
        n /= 2;
    }
    for (u64 d = 3; d * d <= n; d += 2) {
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1) ++factors[n];
    return factors;
}

inline int trial_division_omega(u64 n) {
    int omega = 0;
    for (const auto& [p, m] : trial_division_factors(n)) omega += m;
    return omega;
}

// nu1 over an arbitrary modulus d: residues coprime to d with f(a) = 0 mod d.
inline u64 nu1_enum_mod(const sievebound::IntPolynomial& f, u64 d) {
    u64 count = 0;
    for (u64 a = 0; a < d; ++a) {
        mpz_class g;
        mpz_gcd_ui(g.get_mpz_t(), mpz_class(static_cast<unsigned long>(a)).get_mpz_t(),
                   static_cast<unsigned long>(d));
        if (g != 1) continue;
        const mpz_class v = f(mpz_class(static_cast<unsigned long>(a)));
        if (mpz_fdiv_ui(v.get_mpz_t(), d) == 0) ++count;
    }
    return count;
}

// nu2 over an arbitrary modulus d: residues with a*f(a) = 0 mod d.
inline u64 nu2_enum_mod(const sievebound::IntPolynomial& f, u64 d) {
    u64 count = 0;
    for (u64 a = 0; a < d; ++a) {
        const mpz_class v = a * f(mpz_class(static_cast<unsigned long>(a)));
        if (mpz_fdiv_ui(v.get_mpz_t(), d) == 0) ++count;
    }
    return count;
}

// All primes <= n by trial division (independent of the library sieve).
inline std::vector<u64> primes_by_trial_division(u64 n) {
    std::vector<u64> primes;
    for (u64 m = 2; m <= n; ++m) {
        bool prime = true;
        for (u64 d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(m);
    }
    return primes;
}

}  // namespace oracles
