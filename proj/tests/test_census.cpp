#include <doctest.h>

#include "oracles.hpp"
#include "primeroots/census.hpp"

using namespace primeroots;

TEST_CASE("twin_pairs on known limits") {
    auto small = twin_pairs(20);
    std::vector<TwinPair> expected{{3, 5}, {5, 7}, {11, 13}, {17, 19}};
    CHECK(small == expected);

    CHECK(twin_pairs(4).empty());

    auto hundred = twin_pairs(100);
    REQUIRE(hundred.size() == 8);
    CHECK(hundred.back() == TwinPair{71, 73});
}

TEST_CASE("pi2 boundary and counts") {
    CHECK(pi2(4) == 0);
    CHECK(pi2(5) == 1);  // (3,5) counts once its upper member fits
    CHECK(pi2(20) == 4);
    CHECK(pi2(100000) == 1224); // trial-division oracle, frozen
}

TEST_CASE("twin pairs pass the primality oracle") {
    for (const auto& pair : twin_pairs(3000)) {
        CHECK(pair.q == pair.p + 2);
        CHECK(is_prime(pair.p));
        CHECK(is_prime(pair.q));
    }
}

TEST_CASE("pi2 is nondecreasing") {
    std::uint64_t prev = 0;
    for (std::uint64_t x = 0; x <= 500; x++) {
        std::uint64_t now = pi2(x);
        CHECK(now >= prev);
        prev = now;
    }
}

TEST_CASE("landau_primes on known limits") {
    CHECK(landau_primes(0).empty());
    CHECK(landau_primes(2) == std::vector<std::uint64_t>{1, 2});
    CHECK(landau_primes(10) == std::vector<std::uint64_t>{1, 2, 4, 6, 10});
}

TEST_CASE("landau witnesses match the oracle and are even past n = 1") {
    auto witnesses = landau_primes(2000);
    CHECK(witnesses == oracle::landau_witnesses(2000));
    for (std::uint64_t n : witnesses) {
        CHECK(is_prime(n * n + 1));
        if (n != 1) CHECK(n % 2 == 0);
    }
}

TEST_CASE("landau census count is nondecreasing") {
    std::size_t prev = 0;
    for (std::uint64_t n_max = 0; n_max <= 200; n_max += 10) {
        auto now = landau_primes(n_max).size();
        CHECK(now >= prev);
        prev = now;
    }
}
