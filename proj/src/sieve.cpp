#include "primeroots/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>

namespace primeroots {

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) r--;
    while ((r + 1) <= n / (r + 1)) r++;
    return r;
}

namespace {

// Plain sieve for the base primes; only ever run up to kBasePrimeCap.
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
    std::vector<std::uint8_t> mark(limit + 1, 1);
    mark[0] = 0;
    if (limit >= 1) mark[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; i++)
        if (mark[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; i++)
        if (mark[i]) primes.push_back(i);
    return primes;
}

std::mutex g_base_mutex;
std::shared_ptr<const std::vector<std::uint64_t>> g_base_primes; // guarded by g_base_mutex
std::atomic<std::uint64_t> g_base_limit{0};

std::mutex g_table_mutex;
std::shared_ptr<const PrimalityTable> g_table; // guarded by g_table_mutex

} // namespace

std::shared_ptr<const std::vector<std::uint64_t>> base_primes(std::uint64_t limit) {
    if (limit > kBasePrimeCap)
        fail(errc::range_too_large, "base prime request above cap");
    std::lock_guard lk(g_base_mutex);
    if (!g_base_primes || g_base_limit.load() < limit) {
        std::uint64_t grow = std::max<std::uint64_t>(limit, 1 << 16);
        grow = std::min(std::max(grow, g_base_limit.load() * 2), kBasePrimeCap);
        g_base_primes = std::make_shared<const std::vector<std::uint64_t>>(simple_sieve(grow));
        g_base_limit.store(grow);
    }
    return g_base_primes;
}

PrimeSegment::PrimeSegment(std::uint64_t lo, std::uint64_t hi)
    : lo_(lo), hi_(hi), words_((hi - lo + 63) / 64, ~std::uint64_t{0}) {}

void PrimeSegment::set(std::uint64_t n, bool prime) {
    std::uint64_t i = n - lo_;
    if (prime)
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::uint64_t PrimeSegment::count() const {
    std::uint64_t c = 0;
    for (std::uint64_t n = lo_; n < hi_; n++)
        if (is_prime(n)) c++;
    return c;
}

std::vector<std::uint64_t> PrimeSegment::primes() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo_; n < hi_; n++)
        if (is_prime(n)) out.push_back(n);
    return out;
}

PrimeSegment sieve_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) fail(errc::invalid_argument, "sieve_range: lo > hi");
    if (hi - lo > kSegmentBudget) fail(errc::range_too_large, "sieve_range: span exceeds segment budget");

    PrimeSegment seg(lo, hi);
    if (lo == hi) return seg;

    for (std::uint64_t n = lo; n < std::min<std::uint64_t>(hi, 2); n++) seg.set(n, false);

    std::uint64_t root = isqrt(hi == 0 ? 0 : hi - 1);
    auto primes = base_primes(root);
    for (std::uint64_t p : *primes) {
        if (p > root) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t m = start; m < hi; m += p) seg.set(m, false);
    }
    return seg;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) fail(errc::invalid_argument, "primes_in: lo > hi");
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = lo; a < hi;) {
        std::uint64_t b = std::min(hi, a + kSegmentBudget);
        PrimeSegment seg = sieve_range(a, b);
        for (std::uint64_t n = a; n < b; n++)
            if (seg.is_prime(n)) out.push_back(n);
        a = b;
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    // Fast path for anything covered by the shared table.
    {
        std::lock_guard lk(g_table_mutex);
        if (g_table && n <= g_table->limit()) return g_table->is_prime(n);
    }
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

PrimalityTable::PrimalityTable(std::uint64_t limit)
    : limit_(limit), words_(limit < 3 ? 0 : ((limit - 3) / 2 + 64) / 64, ~std::uint64_t{0}) {}

std::shared_ptr<const PrimalityTable> PrimalityTable::build(std::uint64_t limit) {
    auto table = std::shared_ptr<PrimalityTable>(new PrimalityTable(limit));
    if (limit < 3) return table;

    auto clear = [&](std::uint64_t n) {
        std::uint64_t i = (n - 3) >> 1;
        table->words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    };

    std::uint64_t root = isqrt(limit);
    auto primes = base_primes(root);
    for (std::uint64_t p : *primes) {
        if (p == 2) continue;
        if (p > root) break;
        std::uint64_t start = p * p; // odd, since p is odd
        for (std::uint64_t m = start; m <= limit; m += 2 * p) clear(m);
    }
    // Mask tail bits past limit so popcount-style walks stay honest.
    std::uint64_t nbits = (limit - 3) / 2 + 1;
    if (nbits % 64 != 0 && !table->words_.empty())
        table->words_.back() &= (std::uint64_t{1} << (nbits % 64)) - 1;
    return table;
}

std::shared_ptr<const PrimalityTable> shared_table(std::uint64_t min_limit) {
    std::lock_guard lk(g_table_mutex);
    if (!g_table || g_table->limit() < min_limit) {
        std::uint64_t grow = std::max<std::uint64_t>(min_limit, 1 << 16);
        // Grow geometrically so incremental requests don't resieve per call.
        if (g_table) grow = std::max(grow, g_table->limit() * 2);
        g_table = PrimalityTable::build(grow);
    }
    return g_table;
}

} // namespace primeroots
