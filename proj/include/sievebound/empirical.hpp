#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "sievebound/densities.hpp"
#include "sievebound/errors.hpp"
#include "sievebound/factorization.hpp"
#include "sievebound/polynomial.hpp"
#include "sievebound/primes.hpp"

namespace sievebound {

// Per-run empirical data over the dyadic range (x, 2x].
struct EmpiricalReport {
    u64 x = 0;
    u64 set_size = 0;             // X = pi(2x) - pi(x)
    mpz_class n_max = 0;          // N = max f(p) over the range
    std::map<int, u64> counts;    // r -> #{p : Omega(f(p)) <= r}
    double weighted_s = 0.0;      // S
    double remainder_sum = 0.0;   // sum of |R_d| over squarefree d
    double remainder_mean = 0.0;
    double remainder_max = 0.0;
};

struct RemainderStats {
    double sum = 0.0;
    double mean = 0.0;
    double max = 0.0;
    u64 squarefree_count = 0;
};

namespace detail {

// f(p) for all p in (x, 2x], ascending; values must be positive and below
// 2^128 so they can be factored.
struct RangeValues {
    std::vector<u64> primes;
    std::vector<mpz_class> values;
    mpz_class n_max = 0;
};

inline RangeValues evaluate_range(const IntPolynomial& f, u64 x) {
    if (x < 2) throw std::invalid_argument("evaluate_range: need x >= 2");
    if (x > (std::numeric_limits<u64>::max)() / 2)
        throw RangeTooLarge("evaluate_range: 2x overflows");
    RangeValues rv;
    rv.primes = primes_in(x, 2 * x);
    rv.values.reserve(rv.primes.size());
    for (const u64 p : rv.primes) {
        mpz_class v = f(mpz_class(static_cast<unsigned long>(p)));
        if (v < 1)
            throw ParameterError("evaluate_range: f is not positive at p=" + std::to_string(p));
        if (mpz_sizeinbase(v.get_mpz_t(), 2) > 128)
            throw ValueTooLarge("evaluate_range: f(p) exceeds 2^128 at p=" + std::to_string(p));
        if (v > rv.n_max) rv.n_max = v;
        rv.values.push_back(std::move(v));
    }
    return rv;
}

}  // namespace detail

// #{p in (x,2x] : Omega(f(p)) <= r} for each r in 0..r_max.
inline std::map<int, u64> count_almost_primes(const IntPolynomial& f, u64 x, int r_max,
                                              const FactorBudget& budget = {}) {
    if (r_max < 0) throw std::invalid_argument("count_almost_primes: need r_max >= 0");
    const auto rv = detail::evaluate_range(f, x);
    std::vector<int> omegas;
    omegas.reserve(rv.values.size());
    for (const auto& v : rv.values) omegas.push_back(factorize(v, budget).omega_big);
    std::map<int, u64> counts;
    for (int r = 0; r <= r_max; ++r) {
        u64 c = 0;
        for (const int om : omegas) c += om <= r;
        counts[r] = c;
    }
    return counts;
}

// Weighted sum S over n = f(p) free of prime factors below z = N^alpha:
//   w(n) = 1 - (1/eta) * sum_{q | n, z <= q < y} (1 - log q / log y),
// with y = N^beta and eta = r + 1 - 1/beta.
inline double weighted_sum(const IntPolynomial& f, u64 x, double alpha, double beta, int r,
                           const FactorBudget& budget = {}) {
    const int k = f.degree();
    if (!(alpha > 0.0 && alpha < beta && beta < 1.0 / k))
        throw ParameterError("weighted_sum: need 0 < alpha < beta < 1/deg f");
    if (!(beta > 1.0 / (r + 1.0)))
        throw ParameterError("weighted_sum: need beta > 1/(r+1) so eta > 0");
    const double eta = r + 1.0 - 1.0 / beta;

    const auto rv = detail::evaluate_range(f, x);
    const double log_n = std::log(mpz_get_d(rv.n_max.get_mpz_t()));
    const double z = std::exp(alpha * log_n);
    const double log_y = beta * log_n;

    double total = 0.0;
    for (const auto& v : rv.values) {
        const auto rec = factorize(v, budget);
        bool sieved_out = false;
        double inner = 0.0;
        for (const auto& [q, mult] : rec.factors) {
            const double qd = mpz_get_d(q.get_mpz_t());
            if (qd < z) {
                sieved_out = true;
                break;
            }
            const double lq = std::log(qd);
            if (lq < log_y) inner += 1.0 - lq / log_y;  // distinct primes only
        }
        if (sieved_out) continue;
        total += 1.0 - inner / eta;
    }
    return total;
}

// |R_d| statistics over squarefree d <= d_max, where
// R_d = #A_d - X nu1(d)/phi(d) and #A_d counts p with d | f(p).
inline RemainderStats remainder_stats(const IntPolynomial& f, u64 x, u64 d_max) {
    if (d_max < 1) throw std::invalid_argument("remainder_stats: need d_max >= 1");
    const auto rv = detail::evaluate_range(f, x);
    const double set_size = static_cast<double>(rv.primes.size());

    RemainderStats stats;
    for (u64 d = 1; d <= d_max; ++d) {
        u64 phi = 1;
        bool squarefree = true;
        {
            u64 m = d;
            for (u64 q = 2; q * q <= m; ++q) {
                if (m % q) continue;
                m /= q;
                if (m % q == 0) {
                    squarefree = false;
                    break;
                }
                phi *= q - 1;
            }
            if (squarefree && m > 1) phi *= m - 1;
        }
        if (!squarefree) continue;
        const u64 nu = d == 1 ? 1 : nu_squarefree(f, d, DensityKind::nu1);
        u64 hits = 0;
        for (const auto& v : rv.values) hits += mpz_divisible_ui_p(v.get_mpz_t(), d) != 0;
        const double r_d = static_cast<double>(hits) -
                           set_size * static_cast<double>(nu) / static_cast<double>(phi);
        stats.sum += std::abs(r_d);
        stats.max = std::max(stats.max, std::abs(r_d));
        ++stats.squarefree_count;
    }
    stats.mean = stats.sum / static_cast<double>(stats.squarefree_count);
    return stats;
}

// #{p in (x,2x] : q^2 | f(p) for some prime q in [z, y)}.
inline u64 square_divisor_count(const IntPolynomial& f, u64 x, double z, double y,
                                const FactorBudget& budget = {}) {
    if (!(z >= 2.0 && z < y))
        throw std::invalid_argument("square_divisor_count: need 2 <= z < y");
    const auto rv = detail::evaluate_range(f, x);
    u64 count = 0;
    for (const auto& v : rv.values) {
        const auto rec = factorize(v, budget);
        for (const auto& [q, mult] : rec.factors) {
            if (mult < 2) continue;
            const double qd = mpz_get_d(q.get_mpz_t());
            if (qd >= z && qd < y) {
                ++count;
                break;
            }
        }
    }
    return count;
}

struct EmpiricalParams {
    double alpha = 0.0;
    double beta = 0.0;
    int r = 0;
    int r_max = 8;
    u64 d_max = 100;
};

// Full report for one dyadic range; parameters are taken as given (the CLI
// derives them from the bound optimizer when not overridden).
inline EmpiricalReport run_empirical(const IntPolynomial& f, u64 x, const EmpiricalParams& ep,
                                     const FactorBudget& budget = {}) {
    EmpiricalReport report;
    report.x = x;
    const auto rv = detail::evaluate_range(f, x);
    report.set_size = rv.primes.size();
    report.n_max = rv.n_max;
    report.counts = count_almost_primes(f, x, ep.r_max, budget);
    report.weighted_s = weighted_sum(f, x, ep.alpha, ep.beta, ep.r, budget);
    const auto rem = remainder_stats(f, x, ep.d_max);
    report.remainder_sum = rem.sum;
    report.remainder_mean = rem.mean;
    report.remainder_max = rem.max;
    return report;
}

}  // namespace sievebound
