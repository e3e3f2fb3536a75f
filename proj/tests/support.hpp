#pragma once

// Shared helpers for the test suites. Oracles here are deliberately
// independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cyclarea/geometry.hpp"

namespace testsupport {

inline double rel_err(double x, double y) {
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

// Canonical [0,1) double from the engine's top 53 bits, platform independent.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

// Coordinates of a triangle with side lengths a = |BC|, b = |CA|, c = |AB|,
// laid out with A at the origin and B on the positive x axis.
inline std::vector<cyclarea::Point2> embed_triangle(double a, double b, double c) {
    const double cx = (b * b + c * c - a * a) / (2.0 * c);
    const double cy = std::sqrt(std::max(0.0, b * b - cx * cx));
    return {{0.0, 0.0}, {c, 0.0}, {cx, cy}};
}

// Plain Heron evaluation from side lengths, kept separate from the library's.
inline double heron_oracle(double a, double b, double c) {
    const double p = 0.5 * (a + b + c);
    return std::sqrt(p * (p - a) * (p - b) * (p - c));
}

} // namespace testsupport
