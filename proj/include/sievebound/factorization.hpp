#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "sievebound/errors.hpp"
#include "sievebound/primes.hpp"

namespace sievebound {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Complete factorization of n together with Omega(n), the number of prime
// factors counted with multiplicity.  n is in P_r exactly when omega_big <= r.
struct FactorizationRecord {
    mpz_class n = 1;
    std::vector<std::pair<mpz_class, int>> factors;  // ascending primes
    int omega_big = 0;
};

// Iteration allowance for the splitting stage; exceeding it raises
// Unfactored so the caller can retry with a wider budget.
struct FactorBudget {
    u64 rho_iterations = 8'000'000;
    int rho_restarts = 24;
};

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = m == 1 ? 0 : 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the first twelve primes certify all n < 2^64.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline u64 splitmix64(u64& state) {
    state += 0x9e3779b97f4a7c15ull;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace detail {

inline bool miller_rabin_mpz(const mpz_class& n, const mpz_class& a) {
    mpz_class d = n - 1;
    mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

inline u64 low_bits(const mpz_class& n) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), n.get_mpz_t(), 64);
    return mpz_get_ui(r.get_mpz_t());
}

}  // namespace detail

// Primality test: deterministic witnesses below 2^64, forty witnesses from a
// per-n seeded generator above.
inline bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
    if (mpz_even_p(n.get_mpz_t())) return false;
    u64 state = detail::low_bits(n) ^ 0x5851f42d4c957f2dull;
    for (int i = 0; i < 40; ++i) {
        mpz_class a = splitmix64(state);
        a = a % (n - 3) + 2;
        if (!detail::miller_rabin_mpz(n, a)) return false;
    }
    return true;
}

namespace detail {

// Brent-cycle Pollard rho; returns a nontrivial factor of odd composite n,
// or 0 when the iteration allowance runs out or the polynomial degenerates.
inline u64 brent_rho_u64(u64 n, u64 c, u64 x0, u64& iters_left) {
    const auto step = [n, c](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
    u64 y = x0, r = 1, q = 1, g = 1, x = 0, ys = 0;
    constexpr u64 kBatch = 128;
    while (g == 1) {
        if (iters_left < r) {
            iters_left = 0;
            return 0;
        }
        iters_left -= r;
        x = y;
        for (u64 i = 0; i < r; ++i) y = step(y);
        for (u64 k = 0; k < r && g == 1; k += kBatch) {
            const u64 lim = std::min(kBatch, r - k);
            if (iters_left < lim) {
                iters_left = 0;
                return 0;
            }
            iters_left -= lim;
            ys = y;
            for (u64 i = 0; i < lim; ++i) {
                y = step(y);
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            if (iters_left == 0) return 0;
            --iters_left;
            ys = step(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        }
    }
    return g == n ? 0 : g;
}

inline mpz_class brent_rho_mpz(const mpz_class& n, const mpz_class& c, const mpz_class& x0,
                               u64& iters_left) {
    const auto step = [&n, &c](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    mpz_class y = x0, q = 1, g = 1, x, ys, diff;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    while (g == 1) {
        if (iters_left < r) {
            iters_left = 0;
            return 0;
        }
        iters_left -= r;
        x = y;
        for (u64 i = 0; i < r; ++i) y = step(y);
        for (u64 k = 0; k < r && g == 1; k += kBatch) {
            const u64 lim = std::min(kBatch, r - k);
            if (iters_left < lim) {
                iters_left = 0;
                return 0;
            }
            iters_left -= lim;
            ys = y;
            for (u64 i = 0; i < lim; ++i) {
                y = step(y);
                diff = x > y ? x - y : y - x;
                q = q * diff % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            if (iters_left == 0) return 0;
            --iters_left;
            ys = step(ys);
            diff = x > ys ? x - ys : ys - x;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
    }
    return g == n ? 0 : g;
}

inline const std::vector<u64>& trial_primes() {
    static const std::vector<u64> primes = simple_sieve(10'000);
    return primes;
}

inline void split_composite(const mpz_class& m, int mult, std::map<mpz_class, int>& acc,
                            u64& iters_left, const FactorBudget& budget) {
    if (m == 1) return;
    if (is_prime(m)) {
        acc[m] += mult;
        return;
    }
    // Perfect powers would stall rho's gcd cascade; peel them off first.
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (unsigned e = 2; e <= 128; ++e) {
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), e)) {
                split_composite(root, mult * static_cast<int>(e), acc, iters_left, budget);
                return;
            }
        }
    }
    u64 seed = low_bits(m) ^ 0xda3e39cb94b95bdbull;
    for (int attempt = 0; attempt < budget.rho_restarts; ++attempt) {
        if (iters_left == 0) break;
        mpz_class d;
        if (mpz_fits_ulong_p(m.get_mpz_t())) {
            const u64 mv = mpz_get_ui(m.get_mpz_t());
            const u64 c = splitmix64(seed) % (mv - 2) + 1;
            const u64 x0 = splitmix64(seed) % mv;
            d = brent_rho_u64(mv, c, x0, iters_left);
        } else {
            mpz_class c = splitmix64(seed);
            mpz_class x0 = splitmix64(seed);
            d = brent_rho_mpz(m, c % (m - 2) + 1, x0 % m, iters_left);
        }
        if (d > 1) {
            split_composite(d, mult, acc, iters_left, budget);
            split_composite(m / d, mult, acc, iters_left, budget);
            return;
        }
    }
    throw Unfactored("factorize: splitting budget exhausted for " + m.get_str());
}

}  // namespace detail

inline FactorizationRecord factorize(const mpz_class& n, const FactorBudget& budget = {}) {
    if (n < 1) throw std::invalid_argument("factorize: need n >= 1");
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 128)
        throw ValueTooLarge("factorize: n must be below 2^128");

    FactorizationRecord rec;
    rec.n = n;
    if (n == 1) return rec;

    std::map<mpz_class, int> acc;
    mpz_class m = n;
    for (const u64 p : detail::trial_primes()) {
        if (mpz_cmp_ui(m.get_mpz_t(), 1) == 0) break;
        if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;  // remaining m is prime
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++acc[p];
        }
    }
    if (m > 1) {
        u64 iters_left = budget.rho_iterations;
        detail::split_composite(m, 1, acc, iters_left, budget);
    }

    for (const auto& [p, mult] : acc) {
        rec.factors.emplace_back(p, mult);
        rec.omega_big += mult;
    }
    return rec;
}

// Round-trip check: the listed primes reconstruct n and are all prime.
inline bool verify(const FactorizationRecord& rec) {
    mpz_class prod = 1;
    int omega = 0;
    for (const auto& [p, mult] : rec.factors) {
        if (mult < 1 || !is_prime(p)) return false;
        for (int i = 0; i < mult; ++i) prod *= p;
        omega += mult;
    }
    return prod == rec.n && omega == rec.omega_big;
}

}  // namespace sievebound
