#pragma once

#include <cstddef>
#include <vector>

namespace cyclarea {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Circle {
    Point2 center;
    double radius = 1.0;
};

/// Convex polygon inscribed in a circle, stored as the circle plus strictly
/// increasing vertex angles. The first angle is normalized into [0, 2*pi);
/// consecutive central gaps, including the wrap-around one, are all at least
/// kMinGap and sum to a full turn. Immutable after construction.
class CyclicPolygon {
public:
    static constexpr double kMinGap = 1e-9; // radians

    CyclicPolygon(Circle circle, std::vector<double> thetas);

    const Circle& circle() const { return circle_; }
    const std::vector<double>& thetas() const { return thetas_; }
    std::size_t vertex_count() const { return thetas_.size(); }

    /// Central gap of edge i, from vertex i to vertex i+1 (wrapping).
    std::vector<double> gaps() const;

private:
    Circle circle_;
    std::vector<double> thetas_;
};

std::vector<Point2> vertices(const CyclicPolygon& poly);

/// Edge chord lengths, 2*R*sin(gap/2), in vertex order.
std::vector<double> side_lengths(const CyclicPolygon& poly);

/// 0.5 * |sum_i (x_i*y_{i+1} - x_{i+1}*y_i)|. The coordinate oracle every
/// tangent-length formula is checked against. Needs at least 3 points.
double shoelace_area(const std::vector<Point2>& points);

} // namespace cyclarea
