#include "cyclarea/fan.hpp"

#include <cmath>

#include "cyclarea/errors.hpp"

namespace cyclarea {

TriangleSplit TriangleSplit::from_tangents(double r, double s, double t) {
    if (!(std::isfinite(r) && r > 0.0 && std::isfinite(s) && s > 0.0 && std::isfinite(t) && t > 0.0))
        throw InvalidInputError("tangent lengths must be positive and finite");
    TriangleSplit split;
    split.r = r;
    split.s = s;
    split.t = t;
    split.p = r + s + t;
    split.rho = std::sqrt(r * s * t / split.p);
    split.area = std::sqrt(split.p * r * s * t);
    return split;
}

std::array<double, 3> tangent_split(double side_a, double side_b, double side_c) {
    for (double s : {side_a, side_b, side_c})
        if (!(std::isfinite(s) && s > 0.0))
            throw InvalidInputError("side lengths must be positive and finite");
    if (!(side_a < side_b + side_c && side_b < side_a + side_c && side_c < side_a + side_b))
        throw InvalidInputError("degenerate triangle: strict triangle inequality violated");
    const double p = 0.5 * (side_a + side_b + side_c);
    const std::array<double, 3> tangents = {p - side_a, p - side_b, p - side_c};
    for (double t : tangents)
        if (!(t > 0.0))
            throw InvalidInputError("degenerate triangle: a tangent length vanished");
    return tangents;
}

std::vector<FanTriangleArcs> fan_triangle_arcs(const CyclicPolygon& poly, int apex_index) {
    const int m = static_cast<int>(poly.vertex_count());
    if (apex_index < 0 || apex_index >= m)
        throw InvalidInputError("apex index out of range");
    const std::vector<double> gaps = poly.gaps();
    std::vector<FanTriangleArcs> arcs;
    arcs.reserve(static_cast<std::size_t>(m - 2));
    double cum = gaps[static_cast<std::size_t>(apex_index)];
    for (int j = 1; j <= m - 2; ++j) {
        const double edge = gaps[static_cast<std::size_t>((apex_index + j) % m)];
        arcs.push_back({cum, edge, cum + edge});
        cum += edge;
    }
    return arcs;
}

FanDecomposition fan_decompose(const CyclicPolygon& poly, int apex_index) {
    const std::vector<FanTriangleArcs> arcs = fan_triangle_arcs(poly, apex_index);
    const double radius = poly.circle().radius;
    auto chord = [radius](double arc) { return 2.0 * radius * std::sin(0.5 * arc); };

    FanDecomposition fan;
    fan.apex_index = apex_index;
    fan.splits.reserve(arcs.size());
    for (const FanTriangleArcs& a : arcs) {
        const double near_diag = chord(a.near_diag);
        const double edge = chord(a.edge);
        const double far_diag = chord(a.far_diag);
        // Tangent at the vertex opposite each side: far diagonal faces the
        // lower base vertex (r), the base edge faces the apex (s), the near
        // diagonal faces the higher base vertex (t).
        const std::array<double, 3> tg = tangent_split(far_diag, edge, near_diag);
        fan.splits.push_back(TriangleSplit::from_tangents(tg[0], tg[1], tg[2]));
    }
    return fan;
}

EdgePartition edge_partition(const FanDecomposition& fan) {
    if (fan.splits.empty())
        throw InvalidInputError("fan has no triangles");
    EdgePartition ep;
    ep.s_first = fan.splits.front().s;
    ep.s_last = fan.splits.back().s;
    ep.r.reserve(fan.splits.size());
    ep.t.reserve(fan.splits.size());
    for (const TriangleSplit& split : fan.splits) {
        ep.r.push_back(split.r);
        ep.t.push_back(split.t);
    }
    return ep;
}

} // namespace cyclarea
