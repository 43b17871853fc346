#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "primeroots/errors.hpp"

namespace primeroots {

// Widest range sieve_range() accepts in one call. Keeps a single segment's
// bit table cache-sized no matter how far out the range sits.
inline constexpr std::uint64_t kSegmentBudget = std::uint64_t{1} << 20;

// Base primes are only ever grown up to this limit, which bounds sieving
// and trial division at hi <= kBasePrimeCap^2.
inline constexpr std::uint64_t kBasePrimeCap = 100'000'000;

// Primality flags for the half-open range [lo, hi), one bit per integer.
class PrimeSegment {
public:
    PrimeSegment(std::uint64_t lo, std::uint64_t hi);

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }
    std::uint64_t size() const { return hi_ - lo_; }

    bool contains(std::uint64_t n) const { return n >= lo_ && n < hi_; }

    // n must lie in [lo, hi).
    bool is_prime(std::uint64_t n) const {
        if (!contains(n)) fail(errc::invalid_argument, "PrimeSegment: query outside segment");
        std::uint64_t i = n - lo_;
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    std::uint64_t count() const;
    std::vector<std::uint64_t> primes() const;

    void set(std::uint64_t n, bool prime);

private:
    std::uint64_t lo_;
    std::uint64_t hi_;
    std::vector<std::uint64_t> words_;
};

// Sieve of Eratosthenes over [lo, hi). Errors: invalid-range if lo > hi,
// range-too-large if hi - lo exceeds kSegmentBudget.
PrimeSegment sieve_range(std::uint64_t lo, std::uint64_t hi);

// Deterministic exact primality for any 64-bit n. Table lookup for small n,
// 6k+-1 trial division beyond.
bool is_prime(std::uint64_t n);

// All primes p with lo <= p < hi, ascending. Segments internally, so spans
// larger than kSegmentBudget are fine (the result still has to fit in memory).
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// Packed odd-number primality table for [0, limit], the shared ground truth
// for bulk scans. Immutable after build; safe to share across threads.
class PrimalityTable {
public:
    static std::shared_ptr<const PrimalityTable> build(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    bool is_prime(std::uint64_t n) const {
        if (n > limit_) fail(errc::invalid_argument, "PrimalityTable: query above limit");
        if (n < 3) return n == 2;
        if ((n & 1) == 0) return false;
        std::uint64_t i = (n - 3) >> 1;
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    // Visit primes in [lo, hi] ascending.
    template <class Fn>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        if (hi > limit_) hi = limit_;
        if (lo > hi) return;
        if (lo <= 2 && 2 <= hi) fn(std::uint64_t{2});
        std::uint64_t p = lo < 3 ? 3 : (lo | 1);
        for (; p <= hi; p += 2) {
            std::uint64_t i = (p - 3) >> 1;
            if ((words_[i >> 6] >> (i & 63)) & 1u) fn(p);
        }
    }

private:
    explicit PrimalityTable(std::uint64_t limit);

    std::uint64_t limit_;
    std::vector<std::uint64_t> words_; // bit i <=> 2i+3 prime
};

// Process-wide table cache, grown on demand; never shrinks. Returned tables
// are read-only snapshots.
std::shared_ptr<const PrimalityTable> shared_table(std::uint64_t min_limit);

// Cached primes up to max(limit, previous requests), capped at kBasePrimeCap.
std::shared_ptr<const std::vector<std::uint64_t>> base_primes(std::uint64_t limit);

std::uint64_t isqrt(std::uint64_t n);

} // namespace primeroots
