#include <doctest.h>

#include "oracles.hpp"
#include "primeroots/sieve.hpp"

using namespace primeroots;

TEST_CASE("sieve_range matches trial division") {
    PrimeSegment seg = sieve_range(0, 30);
    std::vector<std::uint64_t> expected{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    CHECK(seg.primes() == expected);

    PrimeSegment offset = sieve_range(90, 100);
    CHECK(offset.primes() == std::vector<std::uint64_t>{97});

    for (std::uint64_t n = 90; n < 100; n++) CHECK(offset.is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("sieve_range handles empty and tiny ranges") {
    PrimeSegment empty = sieve_range(10, 10);
    CHECK(empty.size() == 0);
    CHECK(empty.count() == 0);

    CHECK(sieve_range(0, 1).count() == 0);
    CHECK(sieve_range(2, 3).count() == 1);
}

TEST_CASE("sieve_range rejects bad ranges") {
    CHECK_THROWS_AS(sieve_range(10, 9), Error);
    CHECK_THROWS_AS(sieve_range(0, kSegmentBudget + 1), Error);
    try {
        sieve_range(0, kSegmentBudget + 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::range_too_large);
    }
}

TEST_CASE("segment independence: concatenated segments equal one segment") {
    const std::uint64_t a = 1000, b = 1537, c = 2100; // b deliberately not round
    PrimeSegment left = sieve_range(a, b);
    PrimeSegment right = sieve_range(b, c);
    PrimeSegment whole = sieve_range(a, c);
    for (std::uint64_t n = a; n < c; n++) {
        bool split = n < b ? left.is_prime(n) : right.is_prime(n);
        CHECK(split == whole.is_prime(n));
    }
}

TEST_CASE("is_prime agrees with trial division below 20000") {
    for (std::uint64_t n = 0; n < 20000; n++) {
        CAPTURE(n);
        REQUIRE(is_prime(n) == oracle::is_prime(n));
    }
}

TEST_CASE("is_prime on spot values") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(1000003));
    CHECK_FALSE(is_prime(std::uint64_t{1000003} * 1000003));
}

TEST_CASE("primes_in") {
    CHECK(primes_in(3, 12) == std::vector<std::uint64_t>{3, 5, 7, 11});
    CHECK(primes_in(14, 16).empty());
    CHECK(primes_in(0, 2).empty());
    CHECK_THROWS_AS(primes_in(5, 4), Error);

    // spans more than one internal segment
    auto spanning = primes_in(kSegmentBudget - 100, kSegmentBudget + 100);
    for (std::uint64_t p : spanning) CHECK(oracle::is_prime(p));
    std::uint64_t expected = 0;
    for (std::uint64_t n = kSegmentBudget - 100; n < kSegmentBudget + 100; n++)
        if (oracle::is_prime(n)) expected++;
    CHECK(spanning.size() == expected);
}

TEST_CASE("25 primes below 100") {
    CHECK(sieve_range(0, 100).count() == 25);
    CHECK(primes_in(0, 100).size() == 25);
}

TEST_CASE("PrimalityTable agrees with segment sieving") {
    auto table = PrimalityTable::build(5000);
    PrimeSegment seg = sieve_range(0, 5000);
    for (std::uint64_t n = 0; n < 5000; n++) CHECK(table->is_prime(n) == seg.is_prime(n));
    CHECK_THROWS_AS(table->is_prime(5001), Error);

    std::vector<std::uint64_t> collected;
    table->for_each_prime(0, 30, [&](std::uint64_t p) { collected.push_back(p); });
    CHECK(collected == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("shared_table grows and stays consistent") {
    auto small = shared_table(100);
    CHECK(small->is_prime(97));
    auto bigger = shared_table(small->limit() + 1);
    CHECK(bigger->limit() > small->limit());
    CHECK(bigger->is_prime(97));
}
