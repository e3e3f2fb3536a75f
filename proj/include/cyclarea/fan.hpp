#pragma once

#include <array>
#include <vector>

#include "cyclarea/geometry.hpp"

namespace cyclarea {

/// Tangent lengths the incircle cuts on a triangle's sides, one per vertex,
/// in the fan labeling: s at the apex, r at the lower-index base vertex, t at
/// the higher-index base vertex. Derived: semiperimeter p = r + s + t,
/// inradius rho = sqrt(r*s*t/p), area = sqrt(p*r*s*t).
struct TriangleSplit {
    double r = 0.0;
    double s = 0.0;
    double t = 0.0;
    double p = 0.0;
    double rho = 0.0;
    double area = 0.0;

    static TriangleSplit from_tangents(double r, double s, double t);
};

/// Tangent length at each vertex of a triangle with the given side lengths:
/// element i is semiperimeter minus side i, the tangent length at the vertex
/// opposite side i. Requires the strict triangle inequality.
std::array<double, 3> tangent_split(double side_a, double side_b, double side_c);

/// Fan triangulation from one apex: triangles T_1..T_n, n = vertex_count - 2,
/// where T_j spans the apex and base vertices j, j+1 counted counterclockwise
/// from the apex. Consecutive triangles share the diagonal
///   L_{j,j+1} = s_j + t_j = s_{j+1} + r_{j+1},
/// the first polygon edge at the apex is s_1 + r_1, the last is s_n + t_n,
/// and base edge j is r_j + t_j.
struct FanDecomposition {
    int apex_index = 0;
    std::vector<TriangleSplit> splits;

    int n() const { return static_cast<int>(splits.size()); }
};

FanDecomposition fan_decompose(const CyclicPolygon& poly, int apex_index);

/// Central angles subtended by the three sides of each fan triangle: apex to
/// base vertex j, base edge, apex to base vertex j+1. Each lies in (0, 2*pi).
struct FanTriangleArcs {
    double near_diag = 0.0;
    double edge = 0.0;
    double far_diag = 0.0;
};

std::vector<FanTriangleArcs> fan_triangle_arcs(const CyclicPolygon& poly, int apex_index);

/// The split segments that lie on the polygon's own edges: s_1 and r_1 on the
/// first apex edge, r_j + t_j across each base edge, t_n and s_n on the last
/// apex edge. s_last is redundant given the rest; it is carried as a
/// consistency check.
struct EdgePartition {
    double s_first = 0.0;
    std::vector<double> r;
    std::vector<double> t;
    double s_last = 0.0;
};

EdgePartition edge_partition(const FanDecomposition& fan);

} // namespace cyclarea
