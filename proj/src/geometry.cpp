#include "cyclarea/geometry.hpp"

#include <cmath>
#include <numbers>

#include "cyclarea/errors.hpp"

namespace cyclarea {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

CyclicPolygon::CyclicPolygon(Circle circle, std::vector<double> thetas)
    : circle_(circle), thetas_(std::move(thetas)) {
    if (!std::isfinite(circle_.center.x) || !std::isfinite(circle_.center.y))
        throw InvalidInputError("circle center must be finite");
    if (!(std::isfinite(circle_.radius) && circle_.radius > 0.0))
        throw InvalidInputError("circle radius must be positive and finite");
    if (thetas_.size() < 3)
        throw InvalidInputError("a cyclic polygon needs at least 3 vertices");
    for (double th : thetas_)
        if (!std::isfinite(th))
            throw InvalidInputError("vertex angles must be finite");

    const double shift = kTwoPi * std::floor(thetas_.front() / kTwoPi);
    if (shift != 0.0)
        for (double& th : thetas_)
            th -= shift;

    for (std::size_t i = 0; i + 1 < thetas_.size(); ++i)
        if (!(thetas_[i + 1] - thetas_[i] >= kMinGap))
            throw InvalidInputError("vertex angles must be strictly increasing with gaps of at least 1e-9 rad");
    // Wrap-around gap closes the turn; it is subject to the same floor.
    if (!(kTwoPi - (thetas_.back() - thetas_.front()) >= kMinGap))
        throw InvalidInputError("vertex angles must span less than a full turn, leaving a wrap gap of at least 1e-9 rad");
}

std::vector<double> CyclicPolygon::gaps() const {
    std::vector<double> g(thetas_.size());
    for (std::size_t i = 0; i + 1 < thetas_.size(); ++i)
        g[i] = thetas_[i + 1] - thetas_[i];
    g.back() = kTwoPi - (thetas_.back() - thetas_.front());
    return g;
}

std::vector<Point2> vertices(const CyclicPolygon& poly) {
    const Circle& c = poly.circle();
    std::vector<Point2> pts;
    pts.reserve(poly.vertex_count());
    for (double th : poly.thetas())
        pts.push_back({c.center.x + c.radius * std::cos(th),
                       c.center.y + c.radius * std::sin(th)});
    return pts;
}

std::vector<double> side_lengths(const CyclicPolygon& poly) {
    const double r = poly.circle().radius;
    std::vector<double> sides = poly.gaps();
    for (double& s : sides)
        s = 2.0 * r * std::sin(0.5 * s);
    return sides;
}

double shoelace_area(const std::vector<Point2>& points) {
    if (points.size() < 3)
        throw InvalidInputError("shoelace area needs at least 3 points");
    double twice = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point2& a = points[i];
        const Point2& b = points[(i + 1) % points.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(twice);
}

} // namespace cyclarea
