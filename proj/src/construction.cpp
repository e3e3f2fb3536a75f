#include "cyclarea/construction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cyclarea/errors.hpp"

namespace cyclarea {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double asin_clamped(double x) {
    return std::asin(std::clamp(x, -1.0, 1.0));
}

void check_sides(const std::vector<double>& sides, std::size_t minimum) {
    if (sides.size() < minimum)
        throw InvalidInputError("need at least " + std::to_string(minimum) + " side lengths");
    for (double s : sides)
        if (!(std::isfinite(s) && s > 0.0))
            throw InvalidInputError("side lengths must be positive and finite");
}

} // namespace

namespace detail {

double solve_bracketed(const std::function<double(double)>& f,
                       const std::function<double(double)>& df,
                       double lo, double hi, double width_target, int iteration_cap) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NumericError("root is not bracketed");

    int used = 0;
    while (hi - lo > width_target) {
        if (++used > iteration_cap)
            throw NumericError("bisection exceeded the iteration cap");
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi))
            break; // bracket is at floating-point resolution
        const double fmid = f(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }

    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 5; ++i) {
        const double slope = df(x);
        if (!std::isfinite(slope) || slope == 0.0)
            break;
        const double step = f(x) / slope;
        const double next = x - step;
        if (!(next > lo && next < hi))
            break;
        x = next;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x))
            break;
    }
    return x;
}

} // namespace detail

CyclicPolygon from_central_angles(double radius, const std::vector<double>& gaps) {
    if (gaps.size() < 3)
        throw InvalidInputError("need at least 3 central gaps");
    double total = 0.0;
    for (double g : gaps) {
        if (!(std::isfinite(g) && g > 0.0))
            throw InvalidInputError("central gaps must be positive and finite");
        total += g;
    }
    if (!(std::abs(total - kTwoPi) <= 1e-9))
        throw InvalidInputError("central gaps must sum to 2*pi within 1e-9");

    const double scale = kTwoPi / total;
    std::vector<double> thetas(gaps.size());
    thetas[0] = 0.0;
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
        thetas[i + 1] = thetas[i] + gaps[i] * scale;
    return CyclicPolygon({{0.0, 0.0}, radius}, std::move(thetas));
}

RadiusSolution circumradius_from_sides(const std::vector<double>& sides) {
    check_sides(sides, 3);

    double sum = 0.0;
    std::size_t imax = 0;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        sum += sides[i];
        if (sides[i] > sides[imax])
            imax = i;
    }
    const double smax = sides[imax];
    if (!(smax < sum - smax))
        throw InvalidInputError("infeasible sides: the longest must be shorter than the sum of the rest");

    auto closure_inside = [&](double r) {
        double acc = 0.0;
        for (double s : sides)
            acc += 2.0 * asin_clamped(s / (2.0 * r));
        return acc - kTwoPi;
    };
    auto closure_outside = [&](double r) {
        double acc = 0.0;
        for (std::size_t i = 0; i < sides.size(); ++i)
            if (i != imax)
                acc += asin_clamped(sides[i] / (2.0 * r));
        return acc - asin_clamped(smax / (2.0 * r));
    };
    // d/dR asin(s/(2R)) = -s / (R * sqrt(4R^2 - s^2))
    auto term_slope = [](double s, double r) {
        return -s / (r * std::sqrt(4.0 * r * r - s * s));
    };
    auto slope_inside = [&](double r) {
        double acc = 0.0;
        for (double s : sides)
            acc += 2.0 * term_slope(s, r);
        return acc;
    };
    auto slope_outside = [&](double r) {
        double acc = 0.0;
        for (std::size_t i = 0; i < sides.size(); ++i)
            if (i != imax)
                acc += term_slope(sides[i], r);
        return acc - term_slope(smax, r);
    };

    const double rhalf = 0.5 * smax;
    const double fhalf = closure_inside(rhalf);
    if (std::abs(fhalf) <= 1e-12)
        return {rhalf, true}; // longest side is a diameter
    const bool inside = fhalf > 0.0;
    const std::function<double(double)> f = inside ? std::function<double(double)>(closure_inside)
                                                   : std::function<double(double)>(closure_outside);
    const std::function<double(double)> df = inside ? std::function<double(double)>(slope_inside)
                                                    : std::function<double(double)>(slope_outside);

    // f has the sign of fhalf at rhalf in both regimes. Double from smax
    // until the sign flips.
    double lo = rhalf;
    double flo = inside ? fhalf : 0.5 * fhalf;
    double hi = smax;
    for (;;) {
        if (!std::isfinite(hi))
            throw NumericError("bracket expansion overflowed");
        const double fhi = f(hi);
        if (fhi == 0.0)
            return {hi, inside};
        if ((fhi > 0.0) != (flo > 0.0))
            break;
        lo = hi;
        flo = fhi;
        hi *= 2.0;
    }

    const double root = detail::solve_bracketed(f, df, lo, hi, 1e-14 * smax, 200);
    return {root, inside};
}

CyclicPolygon polygon_from_sides(const std::vector<double>& sides) {
    const RadiusSolution sol = circumradius_from_sides(sides);
    std::vector<double> gaps(sides.size());
    for (std::size_t i = 0; i < sides.size(); ++i)
        gaps[i] = 2.0 * asin_clamped(sides[i] / (2.0 * sol.radius));
    if (!sol.center_inside) {
        const std::size_t imax =
            static_cast<std::size_t>(std::max_element(sides.begin(), sides.end()) - sides.begin());
        double rest = 0.0;
        for (std::size_t i = 0; i < gaps.size(); ++i)
            if (i != imax)
                rest += gaps[i];
        gaps[imax] = kTwoPi - rest; // the longest side subtends the reflex arc
        if (!(gaps[imax] > 0.0))
            throw NumericError("gap reconstruction collapsed for the longest side");
    }
    return from_central_angles(sol.radius, gaps);
}

CyclicPolygon from_vertices(const std::vector<Point2>& points) {
    if (points.size() < 3)
        throw InvalidInputError("need at least 3 points");
    for (const Point2& p : points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidInputError("points must be finite");

    const Point2 a = points[0];
    const Point2 b = points[1];
    const Point2 c = points[2];
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double scale =
        std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y), std::abs(c.x), std::abs(c.y), 1e-300});
    if (std::abs(d) <= 1e-12 * scale * scale)
        throw InvalidInputError("first three points are collinear");
    const double a2 = a.x * a.x + a.y * a.y;
    const double b2 = b.x * b.x + b.y * b.y;
    const double c2 = c.x * c.x + c.y * c.y;
    const Point2 center = {(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                           (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    const double radius = std::hypot(a.x - center.x, a.y - center.y);
    if (!(std::isfinite(radius) && radius > 0.0))
        throw InvalidInputError("points do not determine a valid circle");

    std::vector<double> thetas;
    thetas.reserve(points.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point2& p = points[i];
        const double dist = std::hypot(p.x - center.x, p.y - center.y);
        if (!(std::abs(dist - radius) <= 1e-9 * radius))
            throw InvalidInputError("points are not concyclic within 1e-9 relative");
        const double raw = std::atan2(p.y - center.y, p.x - center.x);
        if (i == 0) {
            thetas.push_back(raw < 0.0 ? raw + kTwoPi : raw);
        } else {
            // Unwrap counterclockwise: each step advances by the positive
            // angular difference.
            double step = raw - prev;
            step -= kTwoPi * std::floor(step / kTwoPi);
            if (step == 0.0)
                throw InvalidInputError("duplicate point on the circle");
            thetas.push_back(thetas.back() + step);
        }
        prev = raw;
    }
    if (!(thetas.back() - thetas.front() < kTwoPi))
        throw InvalidInputError("points are not in counterclockwise cyclic order");
    return CyclicPolygon({center, radius}, std::move(thetas));
}

std::vector<double> random_gaps(std::uint64_t seed, int vertex_count) {
    if (vertex_count < 3)
        throw InvalidInputError("vertex_count must be at least 3");
    std::mt19937_64 eng(seed);
    // Canonical [0,1) from the top 53 bits, so results do not depend on the
    // standard library's distribution implementation.
    auto uniform = [&eng]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };

    const int n = vertex_count;
    const double floor_gap = 1e-4 * (kTwoPi / n);
    std::vector<double> w(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double& x : w) {
        x = uniform();
        total += x;
    }
    if (total <= 0.0) {
        std::fill(w.begin(), w.end(), 1.0);
        total = static_cast<double>(n);
    }
    const double budget = kTwoPi - n * floor_gap;
    for (double& x : w)
        x = floor_gap + budget * (x / total);
    return w;
}

CyclicPolygon random_cyclic_polygon(std::uint64_t seed, int vertex_count, double radius) {
    return from_central_angles(radius, random_gaps(seed, vertex_count));
}

} // namespace cyclarea
