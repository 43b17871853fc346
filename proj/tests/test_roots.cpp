#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "primeroots/roots.hpp"

using namespace primeroots;

namespace {

constexpr double kTol = 1e-12;

bool close(const UnitCircleValue& a, double re, double im) {
    return std::abs(a.re - re) <= kTol && std::abs(a.im - im) <= kTol;
}

// Canonicalize a value set by angle in [0, 2*pi) before comparing.
std::vector<double> angles(std::vector<UnitCircleValue> values) {
    std::vector<double> out;
    for (const auto& v : values) {
        double a = std::atan2(v.im, v.re);
        if (a < 0) a += 2 * std::numbers::pi;
        out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

UnitCircleValue reference_root(std::uint64_t j, std::int64_t alpha) {
    double angle = 2 * std::numbers::pi * (static_cast<double>(j) / static_cast<double>(alpha));
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

TEST_CASE("predicted_alpha follows the offset rule") {
    CHECK(predicted_alpha(0).alpha == 3);
    CHECK(predicted_alpha(1).alpha == 2);
    CHECK(predicted_alpha(-1).alpha == 4);
    CHECK(predicted_alpha(2).alpha == 1);
    CHECK(predicted_alpha(4).alpha == -1);
    CHECK(predicted_alpha(4).magnitude == 1);
    CHECK(predicted_alpha(-3).magnitude == 6);

    auto degenerate = predicted_alpha(3);
    CHECK(degenerate.degenerate);
    CHECK(degenerate.alpha == 0);
    CHECK(degenerate.magnitude == 0);
}

TEST_CASE("unit_value reproduces the worked cases") {
    const double s3 = std::sqrt(3.0) / 2;

    CHECK(close(unit_value(9, 9, 3), 1.0, 0.0));
    CHECK(close(unit_value(9, 9, 1), -0.5, s3));
    CHECK(close(unit_value(9, 9, 2), -0.5, -s3));

    // even target one above an odd reference: the two square roots of unity
    for (std::uint64_t n : {9ULL, 101ULL, 99991ULL}) {
        CHECK(close(unit_value(n + 1, n, 1), -1.0, 0.0));
        CHECK(close(unit_value(n + 1, n, 2), 1.0, 0.0));
    }
}

TEST_CASE("unit_value validates its inputs") {
    CHECK_THROWS_AS(unit_value(9, 9, 0), Error);  // j below range
    CHECK_THROWS_AS(unit_value(12, 9, 1), Error); // alpha = 0
    CHECK_THROWS_AS(unit_value(9, 8, 1), Error);  // even reference
    CHECK_THROWS_AS(unit_value(9, 9, 4), Error);  // j above |alpha|
    try {
        unit_value(12, 9, 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::degenerate_alpha);
    }
    try {
        unit_value(9, 9, 4);
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_j);
    }
}

TEST_CASE("alpha = 1 has the single value 1") {
    auto one = unit_values(1);
    REQUIRE(one.size() == 1);
    CHECK(close(one[0], 1.0, 0.0));
    CHECK(close(unit_value(11, 9, 1), 1.0, 0.0)); // beta 2, the one-value case
}

TEST_CASE("predicted_count for beta 6 is 3 wherever it is anchored") {
    CHECK(predicted_count(15, 9) == 3); // alpha = -3
    CHECK(predicted_count(21, 15) == 3);
}

TEST_CASE("value tables for small |alpha|") {
    const double s3 = std::sqrt(3.0) / 2;
    const double c72 = (std::sqrt(5.0) - 1) / 4;
    const double s72 = std::sqrt(10 + 2 * std::sqrt(5.0)) / 4;
    const double c144 = -(std::sqrt(5.0) + 1) / 4;
    const double s144 = std::sqrt(10 - 2 * std::sqrt(5.0)) / 4;

    auto three = unit_values(3);
    REQUIRE(three.size() == 3);
    CHECK(close(three[0], -0.5, s3));
    CHECK(close(three[1], -0.5, -s3));
    CHECK(close(three[2], 1.0, 0.0));

    auto four = unit_values(4);
    REQUIRE(four.size() == 4);
    CHECK(close(four[0], 0.0, 1.0));
    CHECK(close(four[1], -1.0, 0.0));
    CHECK(close(four[2], 0.0, -1.0));
    CHECK(close(four[3], 1.0, 0.0));

    auto five = unit_values(5);
    REQUIRE(five.size() == 5);
    CHECK(close(five[0], c72, s72));
    CHECK(close(five[1], c144, s144));
    CHECK(close(five[2], c144, -s144));
    CHECK(close(five[3], c72, -s72));
    CHECK(close(five[4], 1.0, 0.0));

    auto six = unit_values(6);
    REQUIRE(six.size() == 6);
    CHECK(close(six[0], 0.5, s3));
    CHECK(close(six[1], -0.5, s3));
    CHECK(close(six[2], -1.0, 0.0));
    CHECK(close(six[3], -0.5, -s3));
    CHECK(close(six[4], 0.5, -s3));
    CHECK(close(six[5], 1.0, 0.0));
}

TEST_CASE("every value lies on the unit circle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; trial++) {
        std::int64_t alpha = static_cast<std::int64_t>(rng() % 41) - 20;
        if (alpha == 0) alpha = 7;
        for (const auto& v : unit_values(alpha)) {
            CHECK(std::abs(v.re * v.re + v.im * v.im - 1.0) <= kTol);
        }
    }
}

TEST_CASE("the integer part of the exponent contributes nothing") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; trial++) {
        std::uint64_t reference = (rng() % 1000000007ULL) | 1;
        std::int64_t beta = static_cast<std::int64_t>(rng() % 25) - 12;
        if (beta == 3) beta = 4;
        std::uint64_t target = static_cast<std::uint64_t>(static_cast<std::int64_t>(reference) + beta);
        std::int64_t alpha = 3 - beta;
        std::uint64_t mag = static_cast<std::uint64_t>(alpha < 0 ? -alpha : alpha);
        std::uint64_t j = 1 + rng() % mag;

        UnitCircleValue full = unit_value(target, reference, j);
        UnitCircleValue direct = reference_root(j, alpha);
        CHECK(std::abs(full.re - direct.re) <= kTol);
        CHECK(std::abs(full.im - direct.im) <= kTol);
    }
}

TEST_CASE("roots of each |alpha| sum to zero") {
    for (std::int64_t alpha : {2, 3, 4, 5, 6, 12, -2, -5, -9}) {
        double re = 0, im = 0;
        for (const auto& v : unit_values(alpha)) {
            re += v.re;
            im += v.im;
        }
        CHECK(std::abs(re) <= 1e-9);
        CHECK(std::abs(im) <= 1e-9);
    }
}

TEST_CASE("negated alpha yields the same value set") {
    for (std::int64_t alpha : {1, 2, 3, 4, 5, 6, 7, 11}) {
        auto pos = angles(unit_values(alpha));
        auto neg = angles(unit_values(-alpha));
        REQUIRE(pos.size() == neg.size());
        for (std::size_t i = 0; i < pos.size(); i++) {
            double diff = std::abs(pos[i] - neg[i]);
            diff = std::min(diff, std::abs(diff - 2 * std::numbers::pi));
            CHECK(diff <= kTol);
        }
    }
}

TEST_CASE("predicted_count depends on the offset alone") {
    std::mt19937_64 rng(3);
    for (std::int64_t beta : {-3, -2, -1, 0, 1, 2, 4, 5}) {
        std::uint64_t expected = predicted_alpha(beta).magnitude;
        for (int trial = 0; trial < 100; trial++) {
            std::uint64_t reference = (rng() % 1000000000ULL) | 1;
            std::uint64_t target =
                static_cast<std::uint64_t>(static_cast<std::int64_t>(reference) + beta);
            CHECK(predicted_count(target, reference) == expected);
        }
    }
}

TEST_CASE("induction step identity") {
    CHECK(induction_step_holds(9, 9, 1));
    CHECK(induction_step_holds(9, 9, 2));
    CHECK(induction_step_holds(9, 9, 3));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; trial++) {
        std::uint64_t m = (rng() % 100000000ULL) | 1;
        std::uint64_t j = 1 + rng() % 3;
        CHECK(induction_step_holds(m, m, j));
    }

    CHECK_THROWS_AS(induction_step_holds(10, 9, 1), Error);
}
