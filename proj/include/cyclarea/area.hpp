#pragma once

#include <utility>
#include <vector>

#include "cyclarea/fan.hpp"

namespace cyclarea {

/// sqrt((r+s+t) * r * s * t) for tangent lengths r, s, t.
double heron_area(double r, double s, double t);

/// sqrt(p * (p-a) * (p-b) * (p-c)) for side lengths under the strict
/// triangle inequality.
double heron_area_sides(double a, double b, double c);

/// Area of a right triangle as the product of the two segments its incircle
/// cuts on the hypotenuse.
double right_triangle_area_product(double s, double t);

/// sqrt((p-a)(p-b)(p-c)(p-d)) for the sides of a cyclic quadrilateral, each
/// shorter than the sum of the other three.
double brahmagupta_area(double a, double b, double c, double d);

/// The two factors whose product is the squared polygon area:
///   f1 = p_1 r_1 + sum_{q=2}^{n} r_q s_q prod_{m=2}^{q-1} s_m / p_m
///   f2 = s_1 t_1 + sum_{q=2}^{n} p_q t_q prod_{m=2}^{q-1} p_m / s_m
struct FactorPair {
    double f1 = 0.0;
    double f2 = 0.0;
};

struct AreaResult {
    double area = 0.0;
    FactorPair factors;
};

/// Polygon area sqrt(f1 * f2) from the fan's stored splits, accumulating
/// terms in ascending q with one running product per factor. An empty fan is
/// the degenerate case and yields area 0 with factors (0, 0). A non-positive
/// factor product raises NumericError.
AreaResult cyclic_area(const FanDecomposition& fan);

/// Both closed forms of the product area(T_h) * area(T_k), 1 <= h < k <= n:
///   first:  s_h t_h s_k r_k prod_{i=h+1}^{k-1} s_i / p_i
///   second: p_h r_h p_k t_k prod_{i=h+1}^{k-1} p_i / s_i
std::pair<double, double> pair_area_product(const FanDecomposition& fan, int h, int k);

/// rho_h * rho_k = r_h t_k prod_{i=h+1}^{k-1} p_i / s_i, 1 <= h < k <= n.
double inradius_chain_product(const FanDecomposition& fan, int h, int k);

/// Evaluates the factor expressions with r and t exchanged and s and p
/// exchanged in every split, in the same accumulation order as cyclic_area.
/// The exchanged f1 equals the plain f2 bit for bit, and vice versa.
FactorPair factor_exchange(const FanDecomposition& fan);

/// Internal split values recovered from the boundary data alone, via
/// s_q = s_{q-1} + t_{q-1} - r_q and p_q = r_q + s_q + t_q, for q = 2..n.
struct InternalSegments {
    std::vector<double> s;
    std::vector<double> p;
};

InternalSegments reconstruct_internal(const EdgePartition& boundary);

} // namespace cyclarea
