#pragma once

#include <gmpxx.h>

#include <vector>

#include "sievebound/factorization.hpp"
#include "sievebound/polynomial.hpp"

namespace sievebound {

namespace detail {

// Divisors of |n|, capped; empty when n is too large to factor cheaply.
inline std::vector<mpz_class> small_divisors(const mpz_class& n, size_t cap = 4096) {
    std::vector<mpz_class> divs{1};
    if (n == 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 128) return {};
    FactorizationRecord rec;
    try {
        rec = factorize(abs(n));
    } catch (const Unfactored&) {
        return {};
    }
    for (const auto& [p, mult] : rec.factors) {
        const size_t base = divs.size();
        mpz_class pe = 1;
        for (int e = 1; e <= mult; ++e) {
            pe *= p;
            for (size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pe);
                if (divs.size() > cap) return {};
            }
        }
    }
    return divs;
}

}  // namespace detail

// Cheap reducibility screen: looks for a rational root a/b with b | leading
// coefficient and a | constant term.  A true result proves f reducible
// (degree >= 2); false proves nothing.
inline bool has_rational_root(const IntPolynomial& f) {
    if (f.degree() < 2) return false;
    if (f.constant_term() == 0) return true;  // x divides f
    const auto nums = detail::small_divisors(f.constant_term());
    const auto dens = detail::small_divisors(f.leading());
    if (nums.empty() || dens.empty()) return false;  // screen inconclusive
    const int k = f.degree();
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            for (int sign = 0; sign < 2; ++sign) {
                // b^k f(a/b) = sum c_i a^i b^(k-i), exact in integers
                const mpz_class av = sign ? mpz_class(-a) : a;
                mpz_class acc = 0;
                mpz_class apow = 1;
                for (int i = 0; i <= k; ++i) {
                    mpz_class bpow;
                    mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k - i));
                    acc += f.coeff(i) * apow * bpow;
                    apow *= av;
                }
                if (acc == 0) return true;
            }
        }
    }
    return false;
}

}  // namespace sievebound
