#include "cyclarea/area.hpp"

#include <array>
#include <cmath>
#include <initializer_list>

#include "cyclarea/errors.hpp"

namespace cyclarea {

namespace {

void check_positive(std::initializer_list<double> values, const char* what) {
    for (double v : values)
        if (!(std::isfinite(v) && v > 0.0))
            throw InvalidInputError(what);
}

struct SplitView {
    double r, s, t, p;
};

std::vector<SplitView> plain_views(const FanDecomposition& fan) {
    std::vector<SplitView> v;
    v.reserve(fan.splits.size());
    for (const TriangleSplit& sp : fan.splits)
        v.push_back({sp.r, sp.s, sp.t, sp.p});
    return v;
}

std::vector<SplitView> exchanged_views(const FanDecomposition& fan) {
    std::vector<SplitView> v;
    v.reserve(fan.splits.size());
    for (const TriangleSplit& sp : fan.splits)
        v.push_back({sp.t, sp.p, sp.r, sp.s}); // r<->t, s<->p
    return v;
}

double first_factor(const std::vector<SplitView>& v) {
    double f = v[0].p * v[0].r;
    double running = 1.0;
    for (std::size_t q = 2; q <= v.size(); ++q) {
        const SplitView& sq = v[q - 1];
        f += sq.r * sq.s * running;
        running *= sq.s / sq.p;
    }
    return f;
}

double second_factor(const std::vector<SplitView>& v) {
    double f = v[0].s * v[0].t;
    double running = 1.0;
    for (std::size_t q = 2; q <= v.size(); ++q) {
        const SplitView& sq = v[q - 1];
        f += sq.p * sq.t * running;
        running *= sq.p / sq.s;
    }
    return f;
}

void check_pair_indices(const FanDecomposition& fan, int h, int k) {
    if (!(1 <= h && h < k && k <= fan.n()))
        throw InvalidInputError("pair indices must satisfy 1 <= h < k <= n");
}

} // namespace

double heron_area(double r, double s, double t) {
    check_positive({r, s, t}, "tangent lengths must be positive and finite");
    return std::sqrt((r + s + t) * r * s * t);
}

double heron_area_sides(double a, double b, double c) {
    const std::array<double, 3> tg = tangent_split(a, b, c);
    const double p = 0.5 * (a + b + c);
    return std::sqrt(p * tg[0] * tg[1] * tg[2]);
}

double right_triangle_area_product(double s, double t) {
    check_positive({s, t}, "hypotenuse segments must be positive and finite");
    return s * t;
}

double brahmagupta_area(double a, double b, double c, double d) {
    check_positive({a, b, c, d}, "side lengths must be positive and finite");
    const double p = 0.5 * (a + b + c + d);
    const double fa = p - a;
    const double fb = p - b;
    const double fc = p - c;
    const double fd = p - d;
    if (!(fa > 0.0 && fb > 0.0 && fc > 0.0 && fd > 0.0))
        throw InvalidInputError("infeasible quadrilateral: each side must be shorter than the sum of the others");
    return std::sqrt(fa * fb * fc * fd);
}

AreaResult cyclic_area(const FanDecomposition& fan) {
    if (fan.splits.empty())
        return {0.0, {0.0, 0.0}};
    const std::vector<SplitView> v = plain_views(fan);
    const FactorPair factors{first_factor(v), second_factor(v)};
    const double product = factors.f1 * factors.f2;
    if (!(factors.f1 > 0.0 && factors.f2 > 0.0 && product > 0.0))
        throw NumericError("factor product collapsed; splits are numerically degenerate");
    return {std::sqrt(product), factors};
}

std::pair<double, double> pair_area_product(const FanDecomposition& fan, int h, int k) {
    check_pair_indices(fan, h, k);
    const std::vector<TriangleSplit>& sp = fan.splits;
    double ratio_sp = 1.0; // prod s_i/p_i over the interior of the chain
    double ratio_ps = 1.0; // prod p_i/s_i
    for (int i = h + 1; i <= k - 1; ++i) {
        const TriangleSplit& si = sp[static_cast<std::size_t>(i - 1)];
        ratio_sp *= si.s / si.p;
        ratio_ps *= si.p / si.s;
    }
    const TriangleSplit& sh = sp[static_cast<std::size_t>(h - 1)];
    const TriangleSplit& sk = sp[static_cast<std::size_t>(k - 1)];
    const double first = sh.s * sh.t * sk.s * sk.r * ratio_sp;
    const double second = sh.p * sh.r * sk.p * sk.t * ratio_ps;
    return {first, second};
}

double inradius_chain_product(const FanDecomposition& fan, int h, int k) {
    check_pair_indices(fan, h, k);
    const std::vector<TriangleSplit>& sp = fan.splits;
    double ratio = 1.0;
    for (int i = h + 1; i <= k - 1; ++i) {
        const TriangleSplit& si = sp[static_cast<std::size_t>(i - 1)];
        ratio *= si.p / si.s;
    }
    return sp[static_cast<std::size_t>(h - 1)].r * sp[static_cast<std::size_t>(k - 1)].t * ratio;
}

FactorPair factor_exchange(const FanDecomposition& fan) {
    if (fan.splits.empty())
        return {0.0, 0.0};
    const std::vector<SplitView> v = exchanged_views(fan);
    return {first_factor(v), second_factor(v)};
}

InternalSegments reconstruct_internal(const EdgePartition& boundary) {
    const std::size_t n = boundary.r.size();
    if (n == 0 || boundary.t.size() != n)
        throw InvalidInputError("boundary must carry matching r and t lists");
    check_positive({boundary.s_first}, "boundary s_first must be positive and finite");
    for (std::size_t i = 0; i < n; ++i)
        check_positive({boundary.r[i], boundary.t[i]}, "boundary segments must be positive and finite");

    InternalSegments out;
    if (n == 1)
        return out; // nothing interior to reconstruct
    out.s.reserve(n - 1);
    out.p.reserve(n - 1);
    double s_prev = boundary.s_first;
    for (std::size_t q = 2; q <= n; ++q) {
        const double s_q = s_prev + boundary.t[q - 2] - boundary.r[q - 1];
        if (!(s_q > 0.0))
            throw InvalidInputError("inconsistent boundary: reconstructed apex segment is not positive");
        out.s.push_back(s_q);
        out.p.push_back(boundary.r[q - 1] + s_q + boundary.t[q - 1]);
        s_prev = s_q;
    }
    return out;
}

} // namespace cyclarea
