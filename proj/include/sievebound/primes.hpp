#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sievebound/errors.hpp"

namespace sievebound {

// All primes <= n, plain sieve of Eratosthenes.
inline std::vector<std::uint64_t> simple_sieve(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= n; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

// Primes in the half-open interval (lo, hi], ascending, via a segmented
// sieve.  The width hi - lo is capped so segment memory stays bounded.
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi,
                                            std::uint64_t max_width = (1ull << 31)) {
    if (lo < 2 || lo >= hi)
        throw std::invalid_argument("primes_in: need 2 <= lo < hi");
    if (hi - lo > max_width)
        throw RangeTooLarge("primes_in: interval wider than the supported width");

    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= hi) ++root;
    const auto base = simple_sieve(root);

    std::vector<std::uint64_t> primes;
    constexpr std::uint64_t kSegment = 1u << 20;
    std::vector<bool> mark;
    for (std::uint64_t seg_lo = lo + 1; seg_lo <= hi;) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
        mark.assign(seg_hi - seg_lo + 1, false);
        for (const auto p : base) {
            if (p * p > seg_hi) break;
            std::uint64_t start = ((seg_lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (std::uint64_t j = start; j <= seg_hi; j += p) mark[j - seg_lo] = true;
        }
        for (std::uint64_t v = seg_lo; v <= seg_hi; ++v)
            if (v >= 2 && !mark[v - seg_lo]) primes.push_back(v);
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
    return primes;
}

}  // namespace sievebound
