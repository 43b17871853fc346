#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primeroots/sieve.hpp"

namespace primeroots {

// An integer written as an unordered multiset of odd primes (each >= 3).
// parts are kept sorted ascending; sum(parts) == target.
struct Representation {
    std::uint64_t target = 0;
    std::vector<std::uint64_t> parts;

    bool operator==(const Representation&) const = default;
};

// All unordered pairs {p, q}, p <= q, of odd primes with p + q = n,
// ascending in p. n must be even and >= 6.
std::vector<Representation> goldbach_pairs(std::uint64_t n);

// Number of Goldbach pairs of n. Same preconditions as goldbach_pairs.
std::uint64_t r2(std::uint64_t n);

// Number of unordered triples {p, q, r} of odd primes with p + q + r = n.
// n must be odd and >= 9.
std::uint64_t r3(std::uint64_t n);

// True iff n is a sum of exactly k odd primes (repetition allowed).
// n >= 2, k >= 1.
bool representable_k(std::uint64_t n, std::uint64_t k);

// Least k with representable_k(n, k), searching k <= ceil(n/3); nullopt when
// no such k exists (2 and 4 have none).
std::optional<std::uint64_t> min_k(std::uint64_t n);

// Table-backed variants for bulk callers. The table must cover n. Counting
// stops at cap, so the result is exact whenever it is below cap.
std::uint64_t r2_capped(std::uint64_t n, std::uint64_t cap, const PrimalityTable& table);
std::uint64_t r3_capped(std::uint64_t n, std::uint64_t cap, const PrimalityTable& table);
bool representable_k(std::uint64_t n, std::uint64_t k, const PrimalityTable& table);
std::optional<std::uint64_t> min_k(std::uint64_t n, const PrimalityTable& table);

} // namespace primeroots
