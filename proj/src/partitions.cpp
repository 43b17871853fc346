#include "primeroots/partitions.hpp"

#include <set>
#include <utility>

namespace primeroots {

namespace {

void require_even_pair_target(std::uint64_t n) {
    if (n < 6 || n % 2 != 0)
        fail(errc::invalid_argument, "goldbach target must be even and >= 6");
}

void require_odd_triple_target(std::uint64_t n) {
    if (n < 9 || n % 2 != 1)
        fail(errc::invalid_argument, "three-prime target must be odd and >= 9");
}

// Failure memo keyed by (n, k); successes return immediately so only dead
// branches are recorded.
using DeadSet = std::set<std::pair<std::uint64_t, std::uint64_t>>;

bool rep_k(std::uint64_t n, std::uint64_t k, const PrimalityTable& table, DeadSet& dead) {
    if (n % 2 != k % 2) return false;
    if (n < 3 * k) return false;
    if (k == 1) return table.is_prime(n); // odd >= 3 by the guards above
    if (k == 2) return r2_capped(n, 1, table) > 0;

    if (dead.contains({n, k})) return false;

    std::uint64_t max_p = n - 3 * (k - 1);
    for (std::uint64_t p = 3; p <= max_p; p += 2) {
        if (!table.is_prime(p)) continue;
        if (rep_k(n - p, k - 1, table, dead)) return true;
    }
    dead.insert({n, k});
    return false;
}

} // namespace

std::uint64_t r2_capped(std::uint64_t n, std::uint64_t cap, const PrimalityTable& table) {
    require_even_pair_target(n);
    std::uint64_t count = 0;
    for (std::uint64_t p = 3; p <= n / 2 && count < cap; p += 2) {
        if (table.is_prime(p) && table.is_prime(n - p)) count++;
    }
    return count;
}

std::uint64_t r3_capped(std::uint64_t n, std::uint64_t cap, const PrimalityTable& table) {
    require_odd_triple_target(n);
    std::uint64_t count = 0;
    for (std::uint64_t p = 3; 3 * p <= n && count < cap; p += 2) {
        if (!table.is_prime(p)) continue;
        std::uint64_t rest = n - p;
        for (std::uint64_t q = p; 2 * q <= rest && count < cap; q += 2) {
            if (!table.is_prime(q)) continue;
            if (table.is_prime(rest - q)) count++;
        }
    }
    return count;
}

bool representable_k(std::uint64_t n, std::uint64_t k, const PrimalityTable& table) {
    if (n < 2) fail(errc::invalid_argument, "representable_k: n must be >= 2");
    if (k < 1) fail(errc::invalid_argument, "representable_k: k must be >= 1");
    DeadSet dead;
    return rep_k(n, k, table, dead);
}

std::optional<std::uint64_t> min_k(std::uint64_t n, const PrimalityTable& table) {
    if (n < 2) fail(errc::invalid_argument, "min_k: n must be >= 2");
    std::uint64_t k_max = (n + 2) / 3;
    DeadSet dead;
    for (std::uint64_t k = 1 + (n % 2 == 0); k <= k_max; k += 2) {
        if (rep_k(n, k, table, dead)) return k;
    }
    return std::nullopt;
}

std::vector<Representation> goldbach_pairs(std::uint64_t n) {
    require_even_pair_target(n);
    auto table = shared_table(n);
    std::vector<Representation> out;
    for (std::uint64_t p = 3; p <= n / 2; p += 2) {
        if (table->is_prime(p) && table->is_prime(n - p))
            out.push_back(Representation{n, {p, n - p}});
    }
    return out;
}

std::uint64_t r2(std::uint64_t n) {
    return r2_capped(n, ~std::uint64_t{0}, *shared_table(n));
}

std::uint64_t r3(std::uint64_t n) {
    return r3_capped(n, ~std::uint64_t{0}, *shared_table(n));
}

bool representable_k(std::uint64_t n, std::uint64_t k) {
    if (n < 2) fail(errc::invalid_argument, "representable_k: n must be >= 2");
    if (k < 1) fail(errc::invalid_argument, "representable_k: k must be >= 1");
    return representable_k(n, k, *shared_table(n));
}

std::optional<std::uint64_t> min_k(std::uint64_t n) {
    if (n < 2) fail(errc::invalid_argument, "min_k: n must be >= 2");
    return min_k(n, *shared_table(n));
}

} // namespace primeroots
