#include "primeroots/census.hpp"

namespace primeroots {

std::vector<TwinPair> twin_pairs(std::uint64_t limit) {
    std::vector<TwinPair> out;
    if (limit < 5) return out;
    auto table = shared_table(limit);
    for (std::uint64_t p = 3; p + 2 <= limit; p += 2) {
        if (table->is_prime(p) && table->is_prime(p + 2)) out.push_back(TwinPair{p, p + 2});
    }
    return out;
}

std::uint64_t pi2(std::uint64_t x) {
    if (x < 5) return 0;
    auto table = shared_table(x);
    std::uint64_t count = 0;
    for (std::uint64_t p = 3; p + 2 <= x; p += 2) {
        if (table->is_prime(p) && table->is_prime(p + 2)) count++;
    }
    return count;
}

bool landau_value_is_prime(std::uint64_t n, const PrimalityTable& table) {
    if (n > 4294967294ULL) fail(errc::range_too_large, "landau: n^2 + 1 exceeds 64 bits");
    if (n == 0) return false; // value 1
    if (n == 1) return true;  // value 2
    std::uint64_t value = n * n + 1;
    if (value % 2 == 0) return false; // odd n > 1 gives an even value > 2
    std::uint64_t root = isqrt(value); // == n, never larger
    for (std::uint64_t p = 3; p <= root; p += 2) {
        if (table.is_prime(p) && value % p == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> landau_primes(std::uint64_t n_max) {
    std::vector<std::uint64_t> out;
    if (n_max == 0) return out;
    auto table = shared_table(std::max<std::uint64_t>(n_max, 3));
    for (std::uint64_t n = 1; n <= n_max; n++) {
        if (landau_value_is_prime(n, *table)) out.push_back(n);
    }
    return out;
}

} // namespace primeroots
