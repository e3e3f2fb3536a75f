#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclarea/geometry.hpp"

namespace cyclarea {

struct RadiusSolution {
    double radius = 0.0;
    /// True when the circumcenter lies inside the polygon or on its longest
    /// side, false when it lies beyond the longest side.
    bool center_inside = true;
};

/// Polygon on a circle of the given radius centered at the origin, with
/// vertex 0 at angle 0 and consecutive central gaps as given. The gaps must
/// be positive and sum to 2*pi within 1e-9; they are rescaled to close the
/// turn exactly.
CyclicPolygon from_central_angles(double radius, const std::vector<double>& gaps);

/// Circumradius of the convex cyclic polygon with the given side lengths, in
/// cyclic order. The closure condition splits into two regimes on
/// [s_max/2, inf):
///   F(R) = sum_i 2*asin(s_i/(2R)) - 2*pi        center inside, F decreasing
///   G(R) = sum_{i != max} asin(s_i/(2R)) - asin(s_max/(2R))   center outside
/// F(s_max/2) >= 0 selects the first regime; |F(s_max/2)| <= 1e-12 is treated
/// as the boundary and returns R = s_max/2 exactly. The root is isolated by
/// doubling the upper end from R = s_max until the sign flips, bisected to a
/// width of 1e-14*s_max, then polished with at most 5 Newton steps.
RadiusSolution circumradius_from_sides(const std::vector<double>& sides);

/// Polygon realizing the given side lengths, via circumradius_from_sides.
/// Cyclic order is taken as given; no reordering. When the center is outside,
/// the longest side's gap is 2*pi minus the sum of the others.
CyclicPolygon polygon_from_sides(const std::vector<double>& sides);

/// Polygon through the given points, which must be concyclic within 1e-9
/// relative and listed in counterclockwise cyclic order.
CyclicPolygon from_vertices(const std::vector<Point2>& points);

/// Deterministic gap sampler: positive weights normalized to a full turn,
/// floored at 1e-4 * (2*pi / vertex_count). Same seed, same gaps, bit for bit.
std::vector<double> random_gaps(std::uint64_t seed, int vertex_count);

CyclicPolygon random_cyclic_polygon(std::uint64_t seed, int vertex_count, double radius);

namespace detail {

/// Bisection on a sign change followed by bracket-guarded Newton polishing.
/// f(lo) and f(hi) must straddle zero. Throws NumericError past iteration_cap.
double solve_bracketed(const std::function<double(double)>& f,
                       const std::function<double(double)>& df,
                       double lo, double hi, double width_target, int iteration_cap);

} // namespace detail

} // namespace cyclarea
