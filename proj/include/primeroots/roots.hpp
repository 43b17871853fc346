#pragma once

#include <cstdint>
#include <vector>

#include "primeroots/errors.hpp"

namespace primeroots {

// One value of the multi-valued predictor: a point on the unit circle.
struct UnitCircleValue {
    double re = 0.0;
    double im = 0.0;
};

// The offset rule alpha = 3 - beta, where beta = target - reference.
// |alpha| is the predicted number of odd-prime parts. beta = 3 makes
// alpha vanish; that case is flagged, not defined away.
struct PredictedCount {
    std::int64_t beta = 0;
    std::int64_t alpha = 0;
    std::uint64_t magnitude = 0;
    bool degenerate = false;
};

PredictedCount predicted_alpha(std::int64_t beta);

// exp(2*pi*i * (j / alpha + (target - 3))) for alpha = 3 - (target - reference).
// The full exponent is evaluated (with exact integer reduction, so huge targets
// stay accurate); the integer (target - 3) term provably contributes nothing,
// which the tests confirm rather than assume.
// reference must be odd; requires alpha != 0 and 1 <= j <= |alpha|.
UnitCircleValue unit_value(std::uint64_t target, std::uint64_t reference, std::uint64_t j);

// The value set {exp(2*pi*i * j / alpha) : j = 1..|alpha|}, in j order.
// These are exactly the |alpha|-th roots of unity. alpha must be nonzero.
std::vector<UnitCircleValue> unit_values(std::int64_t alpha);

// |{values}| = |3 - (target - reference)|. Depends on the offset only.
std::uint64_t predicted_count(std::uint64_t target, std::uint64_t reference);

// Checks the step identity: the value at target m + 2 (reference advanced in
// step) equals the value at m times exp(4*pi*i), within 1e-12 per coordinate.
// m and reference must be odd, with alpha and j valid as for unit_value.
bool induction_step_holds(std::uint64_t m, std::uint64_t reference, std::uint64_t j);

} // namespace primeroots
