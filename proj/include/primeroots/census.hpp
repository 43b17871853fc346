#pragma once

#include <cstdint>
#include <vector>

#include "primeroots/sieve.hpp"

namespace primeroots {

// A prime p with p + 2 also prime.
struct TwinPair {
    std::uint64_t p = 0;
    std::uint64_t q = 0; // p + 2

    bool operator==(const TwinPair&) const = default;
};

// All twin pairs with p + 2 <= limit, ascending in p.
std::vector<TwinPair> twin_pairs(std::uint64_t limit);

// Number of twin pairs with p + 2 <= x.
std::uint64_t pi2(std::uint64_t x);

// All n in [1, n_max] with n^2 + 1 prime, ascending.
std::vector<std::uint64_t> landau_primes(std::uint64_t n_max);

// Exact primality of n^2 + 1 by trial division against table primes <= n.
// The table must cover n. n must be <= 2^32 - 2 so the square fits.
bool landau_value_is_prime(std::uint64_t n, const PrimalityTable& table);

} // namespace primeroots
