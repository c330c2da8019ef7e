#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "sievebound/errors.hpp"
#include "sievebound/factorization.hpp"
#include "sievebound/polynomial.hpp"
#include "sievebound/primes.hpp"

namespace sievebound {

struct DensityRecord {
    u64 modulus = 0;
    u64 nu1 = 0;
    u64 nu2 = 0;
};

namespace detail {

inline u64 addmod(u64 a, u64 b, u64 p) {
    const u64 s = a + b;
    return s >= p ? s - p : s;
}

// Coefficients of g reduced into [0, p), ascending.
inline std::vector<u64> reduce_mod(const std::vector<mpz_class>& coeffs, u64 p) {
    std::vector<u64> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        c[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(), p);
    return c;
}

inline u64 horner_mod(const std::vector<u64>& c, u64 a, u64 p) {
    u64 acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = (mulmod_u64(acc, a, p) + c[i]) % p;
    return acc;
}

// Zeros of g over all residues a in [0, p), by forward-difference stepping:
// after the setup only additions mod p remain in the loop.
inline u64 count_zeros_enum(const std::vector<u64>& c, u64 p) {
    const size_t d = c.size() - 1;
    if (p <= d + 1 || p < 16) {
        u64 count = 0;
        for (u64 a = 0; a < p; ++a) count += horner_mod(c, a, p) == 0;
        return count;
    }
    std::vector<u64> t(d + 1);
    for (size_t i = 0; i <= d; ++i) t[i] = horner_mod(c, i, p);
    for (size_t j = 1; j <= d; ++j)
        for (size_t i = d; i >= j; --i) t[i] = addmod(t[i], p - t[i - 1], p);
    u64 count = 0;
    for (u64 a = 0; a < p; ++a) {
        count += t[0] == 0;
        for (size_t j = 0; j < d; ++j) t[j] = addmod(t[j], t[j + 1], p);
    }
    return count;
}

}  // namespace detail

// nu1(p): residues a in [1, p) with f(a) = 0 mod p, by direct enumeration.
inline u64 nu1(const IntPolynomial& f, u64 p) {
    const auto c = detail::reduce_mod(f.coeffs(), p);
    bool all_zero = true;
    for (const u64 v : c)
        if (v != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) return p - 1;  // p divides the content: every unit is a root
    return detail::count_zeros_enum(c, p) - (c[0] == 0 ? 1 : 0);
}

// nu2(p): residues a in [0, p) with a*f(a) = 0 mod p, by direct enumeration
// of the shifted polynomial x*f(x).
inline u64 nu2(const IntPolynomial& f, u64 p) {
    auto c = detail::reduce_mod(f.coeffs(), p);
    bool all_zero = true;
    for (const u64 v : c)
        if (v != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) return p;
    c.insert(c.begin(), 0);  // x * f(x)
    return detail::count_zeros_enum(c, p);
}

namespace detail {

// Dense polynomial arithmetic in F_p[x]; vectors ascending, no leading zeros.

inline void strip(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 inv_mod(u64 a, u64 p) { return powmod_u64(a, p - 2, p); }

// r = r mod m, with m monic.
inline void poly_reduce(std::vector<u64>& r, const std::vector<u64>& m, u64 p) {
    const size_t dm = m.size() - 1;
    while (r.size() > dm) {
        const u64 lead = r.back();
        const size_t shift = r.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i <= dm; ++i) {
                const u64 sub = mulmod_u64(lead, m[i], p);
                r[shift + i] = addmod(r[shift + i], p - sub, p);
            }
        r.pop_back();
    }
    strip(r);
}

inline std::vector<u64> poly_mulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                                    const std::vector<u64>& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod_u64(a[i], b[j], p), p);
    }
    poly_reduce(r, m, p);
    return r;
}

inline size_t poly_gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        // a mod b via long division
        const u64 binv = inv_mod(b.back(), p);
        while (a.size() >= b.size()) {
            const u64 q = mulmod_u64(a.back(), binv, p);
            const size_t shift = a.size() - b.size();
            if (q != 0)
                for (size_t i = 0; i < b.size(); ++i) {
                    const u64 sub = mulmod_u64(q, b[i], p);
                    a[shift + i] = addmod(a[shift + i], p - sub, p);
                }
            a.pop_back();
            strip(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

}  // namespace detail

// Distinct roots of f in F_p.  Small p by enumeration; larger p via
// deg gcd(x^p - x, f mod p), computing x^p in F_p[x]/(f) by repeated squaring.
inline u64 count_distinct_roots_mod_p(const IntPolynomial& f, u64 p,
                                      u64 enum_threshold = 4096) {
    auto c = detail::reduce_mod(f.coeffs(), p);
    detail::strip(c);
    if (c.empty()) return p;          // f = 0 mod p
    if (c.size() == 1) return 0;      // nonzero constant
    if (c.size() == 2) return 1;      // linear: the single root -c0/c1
    if (p < enum_threshold) return detail::count_zeros_enum(c, p);

    // make monic
    const u64 linv = detail::inv_mod(c.back(), p);
    for (auto& v : c) v = mulmod_u64(v, linv, p);

    // frob = x^p mod (c)
    std::vector<u64> frob{1};
    std::vector<u64> base{0, 1};
    u64 e = p;
    while (e) {
        if (e & 1) frob = detail::poly_mulmod(frob, base, c, p);
        base = detail::poly_mulmod(base, base, c, p);
        e >>= 1;
    }
    // x^p - x
    if (frob.size() < 2) frob.resize(2, 0);
    frob[1] = detail::addmod(frob[1], p - 1, p);
    detail::strip(frob);
    if (frob.empty()) return c.size() - 1;  // f splits into distinct linear factors
    return detail::poly_gcd_degree(c, frob, p);
}

// nu1 computed through the root counter; identical values, usable at large p.
inline u64 nu1_fast(const IntPolynomial& f, u64 p, u64 enum_threshold = 4096) {
    const u64 roots = count_distinct_roots_mod_p(f, p, enum_threshold);
    const bool root_at_zero = mpz_fdiv_ui(f.constant_term().get_mpz_t(), p) == 0;
    return roots - (root_at_zero ? 1 : 0);
}

enum class DensityKind { nu1, nu2 };

// Multiplicative extension of nu1/nu2 over the prime factorization of
// squarefree d.
inline u64 nu_squarefree(const IntPolynomial& f, u64 d, DensityKind kind) {
    if (d < 1) throw std::invalid_argument("nu_squarefree: need d >= 1");
    if (d == 1) return 1;
    const auto rec = factorize(mpz_class(static_cast<unsigned long>(d)));
    u64 value = 1;
    for (const auto& [pz, mult] : rec.factors) {
        if (mult > 1) throw NotSquarefree("nu_squarefree: d has a square factor");
        const u64 p = mpz_get_ui(pz.get_mpz_t());
        value *= (kind == DensityKind::nu1) ? nu1(f, p) : nu2(f, p);
    }
    return value;
}

// Smallest prime at which nu1(p) fails to stay below p-1, if any.  Primes
// p > deg f + 1 not dividing the content satisfy nu1(p) <= deg f < p-1
// automatically, so only finitely many cases need checking.
inline std::optional<mpz_class> local_condition_violation(const IntPolynomial& f) {
    const mpz_class ct = f.content();
    if (ct > 1) return factorize(ct).factors.front().first;
    for (const u64 p : simple_sieve(static_cast<u64>(f.degree()) + 1))
        if (nu1(f, p) >= p - 1) return mpz_class(static_cast<unsigned long>(p));
    return std::nullopt;
}

inline bool check_local_condition(const IntPolynomial& f) {
    return !local_condition_violation(f).has_value();
}

// Per-prime density table up to p_max, by enumeration.
inline std::vector<DensityRecord> density_table(const IntPolynomial& f, u64 p_max) {
    std::vector<DensityRecord> table;
    for (const u64 p : simple_sieve(p_max)) table.push_back({p, nu1(f, p), nu2(f, p)});
    return table;
}

struct MertensDiagnostics {
    double d1 = 0.0;  // sum nu1(p) log p/(p-1) - log x
    double d2 = 0.0;  // sum nu2(p) log p/p - 2 log x
    double p1 = 0.0;  // log x * prod (1 - nu1(p)/(p-1))
    double p2 = 0.0;  // (log x)^2 * prod (1 - nu2(p)/p)
};

// The four Mertens-type quantities over primes p <= x.  Products accumulate
// in log space; summation order is ascending p, so results are
// reproducible bit for bit.
inline MertensDiagnostics mertens_diagnostics(const IntPolynomial& f, u64 x) {
    if (x < 2) throw std::invalid_argument("mertens_diagnostics: need x >= 2");
    double s1 = 0.0, s2 = 0.0, log_p1 = 0.0, log_p2 = 0.0;
    for (const u64 p : simple_sieve(x)) {
        const u64 n1 = nu1_fast(f, p);
        const u64 n2 = n1 + 1;  // nu2(p) = nu1(p) + 1 at every prime
        const double fac1 = 1.0 - static_cast<double>(n1) / static_cast<double>(p - 1);
        if (fac1 <= 0.0)
            throw ConditionFailed("mertens_diagnostics: fixed prime divisor at p=" +
                                  std::to_string(p));
        const double lg = std::log(static_cast<double>(p));
        s1 += static_cast<double>(n1) * lg / static_cast<double>(p - 1);
        s2 += static_cast<double>(n2) * lg / static_cast<double>(p);
        log_p1 += std::log(fac1);
        log_p2 += std::log(1.0 - static_cast<double>(n2) / static_cast<double>(p));
    }
    const double lx = std::log(static_cast<double>(x));
    return {s1 - lx, s2 - 2.0 * lx, lx * std::exp(log_p1), lx * lx * std::exp(log_p2)};
}

}  // namespace sievebound
