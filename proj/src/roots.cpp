#include "primeroots/roots.hpp"

#include <cmath>
#include <numbers>

namespace primeroots {

namespace {

using i128 = __int128;

i128 floor_div(i128 num, i128 den) {
    i128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) q--;
    return q;
}

// exp(2*pi*i * e) for the exact rational exponent e = num/den: reduce e mod 1
// in integer arithmetic, then take cos/sin of an angle inside [0, 2*pi).
UnitCircleValue circle_point(i128 num, i128 den) {
    i128 rem = num - floor_div(num, den) * den;
    double frac = static_cast<double>(rem) / static_cast<double>(den);
    double angle = 2.0 * std::numbers::pi * frac;
    return UnitCircleValue{std::cos(angle), std::sin(angle)};
}

std::int64_t checked_alpha(std::uint64_t target, std::uint64_t reference) {
    if (reference % 2 != 1) fail(errc::invalid_argument, "reference must be odd");
    i128 beta = static_cast<i128>(target) - static_cast<i128>(reference);
    i128 alpha = 3 - beta;
    if (alpha == 0) fail(errc::degenerate_alpha, "offset 3 gives alpha = 0");
    if (alpha > INT64_MAX || alpha < INT64_MIN)
        fail(errc::invalid_argument, "offset out of range");
    return static_cast<std::int64_t>(alpha);
}

std::uint64_t magnitude_of(std::int64_t alpha) {
    return alpha < 0 ? static_cast<std::uint64_t>(-(alpha + 1)) + 1 : static_cast<std::uint64_t>(alpha);
}

} // namespace

PredictedCount predicted_alpha(std::int64_t beta) {
    if (beta < 3 - INT64_MAX) fail(errc::invalid_argument, "beta out of range");
    PredictedCount out;
    out.beta = beta;
    out.alpha = 3 - beta;
    out.magnitude = magnitude_of(out.alpha);
    out.degenerate = (out.alpha == 0);
    return out;
}

UnitCircleValue unit_value(std::uint64_t target, std::uint64_t reference, std::uint64_t j) {
    std::int64_t alpha = checked_alpha(target, reference);
    if (j < 1 || j > magnitude_of(alpha)) fail(errc::invalid_j, "j must lie in 1..|alpha|");
    // exponent = j/alpha + (target - 3) = (j + (target - 3) * alpha) / alpha
    i128 num = static_cast<i128>(j) +
               (static_cast<i128>(target) - 3) * static_cast<i128>(alpha);
    return circle_point(num, alpha);
}

std::vector<UnitCircleValue> unit_values(std::int64_t alpha) {
    if (alpha == 0) fail(errc::degenerate_alpha, "alpha = 0 has no value set");
    std::uint64_t m = magnitude_of(alpha);
    std::vector<UnitCircleValue> out;
    out.reserve(m);
    for (std::uint64_t j = 1; j <= m; j++)
        out.push_back(circle_point(static_cast<i128>(j), alpha));
    return out;
}

std::uint64_t predicted_count(std::uint64_t target, std::uint64_t reference) {
    return magnitude_of(checked_alpha(target, reference));
}

bool induction_step_holds(std::uint64_t m, std::uint64_t reference, std::uint64_t j) {
    if (m % 2 != 1) fail(errc::invalid_argument, "m must be odd");
    UnitCircleValue lhs = unit_value(m + 2, reference + 2, j);
    UnitCircleValue base = unit_value(m, reference, j);
    double c = std::cos(4.0 * std::numbers::pi);
    double s = std::sin(4.0 * std::numbers::pi);
    UnitCircleValue rhs{base.re * c - base.im * s, base.re * s + base.im * c};
    return std::abs(lhs.re - rhs.re) <= 1e-12 && std::abs(lhs.im - rhs.im) <= 1e-12;
}

} // namespace primeroots
