#include "cyclarea/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cyclarea/area.hpp"
#include "cyclarea/construction.hpp"
#include "cyclarea/errors.hpp"
#include "cyclarea/fan.hpp"

namespace cyclarea {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDiameterArcTol = 1e-9; // |arc - pi| below this marks a right angle

struct IdentityDefault {
    const char* name;
    double tolerance;
};

constexpr std::array<IdentityDefault, 14> kSuite = {{
    {"oracle_equivalence", 1e-8},
    {"apex_independence", 1e-8},
    {"chain_constraint", 1e-10},
    {"pair_product_first_form", 1e-9},
    {"pair_product_second_form", 1e-9},
    {"inradius_chain", 1e-9},
    {"triangle_area_identity", 1e-11},
    {"triangle_inradius_identity", 1e-12},
    {"right_triangle_product", 1e-10},
    {"pythagorean_identity", 1e-10},
    {"reconstruction_round_trip", 1e-10},
    {"factor_exchange_symmetry", 0.0},
    {"brahmagupta_quadrilateral", 1e-9},
    {"heron_additivity", 1e-9},
}};

std::map<std::string, double> effective_tolerances(const ToleranceOverrides& overrides) {
    std::map<std::string, double> tol;
    for (const IdentityDefault& d : kSuite)
        tol[d.name] = d.tolerance;
    for (const auto& [name, value] : overrides) {
        if (!tol.count(name))
            throw InvalidInputError("unknown identity in tolerance override: '" + name + "'");
        if (!(std::isfinite(value) && value >= 0.0))
            throw InvalidInputError("tolerance override must be a non-negative finite number");
        tol[name] = value;
    }
    return tol;
}

/// Per-polygon accumulation for one identity.
struct Probe {
    long trials = 0;
    double max_err = 0.0;

    void check(double err) {
        ++trials;
        if (std::isnan(err))
            err = std::numeric_limits<double>::infinity();
        if (err > max_err)
            max_err = err;
    }
};

struct SuiteErrors {
    std::map<std::string, Probe> probes;

    Probe& operator[](const std::string& name) { return probes[name]; }
};

void run_suite(const CyclicPolygon& poly, SuiteErrors& out) {
    const FanDecomposition fan = fan_decompose(poly, 0);
    const std::vector<TriangleSplit>& sp = fan.splits;
    const int n = fan.n();
    const AreaResult result = cyclic_area(fan);
    const double shoelace = shoelace_area(vertices(poly));

    out["oracle_equivalence"].check(relative_error(result.area, shoelace));

    {
        double lo = result.area;
        double hi = result.area;
        const int m = static_cast<int>(poly.vertex_count());
        for (int apex = 1; apex < m; ++apex) {
            const double a = cyclic_area(fan_decompose(poly, apex)).area;
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        Probe& probe = out["apex_independence"];
        probe.trials += m - 1;
        probe.check(relative_error(hi, lo));
    }

    for (int i = 1; i < n; ++i) {
        const TriangleSplit& a = sp[static_cast<std::size_t>(i - 1)];
        const TriangleSplit& b = sp[static_cast<std::size_t>(i)];
        out["chain_constraint"].check(relative_error(a.s + a.t, b.s + b.r));
    }

    for (int h = 1; h < n; ++h)
        for (int k = h + 1; k <= n; ++k) {
            const double direct = sp[static_cast<std::size_t>(h - 1)].area * sp[static_cast<std::size_t>(k - 1)].area;
            const auto [first, second] = pair_area_product(fan, h, k);
            out["pair_product_first_form"].check(relative_error(first, direct));
            out["pair_product_second_form"].check(relative_error(second, direct));
            const double rho_direct = sp[static_cast<std::size_t>(h - 1)].rho * sp[static_cast<std::size_t>(k - 1)].rho;
            out["inradius_chain"].check(relative_error(inradius_chain_product(fan, h, k), rho_direct));
        }

    for (const TriangleSplit& s : sp) {
        out["triangle_area_identity"].check(relative_error(s.area, s.rho * s.p));
        out["triangle_inradius_identity"].check(relative_error(s.rho, s.area / s.p));
    }

    {
        const std::vector<FanTriangleArcs> arcs = fan_triangle_arcs(poly, 0);
        for (int j = 1; j <= n; ++j) {
            const FanTriangleArcs& a = arcs[static_cast<std::size_t>(j - 1)];
            const TriangleSplit& s = sp[static_cast<std::size_t>(j - 1)];
            // A side subtending half a turn is a diameter; the opposite
            // vertex carries the right angle, the side's two tangent
            // segments split the hypotenuse.
            struct Candidate {
                double arc;
                double hyp_a, hyp_b, right_vertex;
            };
            const std::array<Candidate, 3> candidates = {{
                {a.near_diag, s.s, s.r, s.t},
                {a.edge, s.r, s.t, s.s},
                {a.far_diag, s.s, s.t, s.r},
            }};
            for (const Candidate& c : candidates) {
                if (std::abs(c.arc - std::numbers::pi) > kDiameterArcTol)
                    continue;
                out["right_triangle_product"].check(
                    relative_error(right_triangle_area_product(c.hyp_a, c.hyp_b), s.area));
                const double leg_a = c.right_vertex + c.hyp_a;
                const double leg_b = c.right_vertex + c.hyp_b;
                const double hyp = c.hyp_a + c.hyp_b;
                out["pythagorean_identity"].check(relative_error(leg_a * leg_a + leg_b * leg_b, hyp * hyp));
            }
        }
    }

    if (n >= 2) {
        const InternalSegments rec = reconstruct_internal(edge_partition(fan));
        for (int q = 2; q <= n; ++q) {
            const TriangleSplit& s = sp[static_cast<std::size_t>(q - 1)];
            out["reconstruction_round_trip"].check(relative_error(rec.s[static_cast<std::size_t>(q - 2)], s.s));
            out["reconstruction_round_trip"].check(relative_error(rec.p[static_cast<std::size_t>(q - 2)], s.p));
        }
    }

    {
        const FactorPair exchanged = factor_exchange(fan);
        Probe& probe = out["factor_exchange_symmetry"];
        probe.check(exchanged.f1 == result.factors.f2 ? 0.0
                                                      : relative_error(exchanged.f1, result.factors.f2));
        probe.check(exchanged.f2 == result.factors.f1 ? 0.0
                                                      : relative_error(exchanged.f2, result.factors.f1));
    }

    if (poly.vertex_count() == 4) {
        const std::vector<double> sides = side_lengths(poly);
        out["brahmagupta_quadrilateral"].check(
            relative_error(result.area, brahmagupta_area(sides[0], sides[1], sides[2], sides[3])));
    }

    {
        double total = 0.0;
        for (const TriangleSplit& s : sp)
            total += s.area;
        out["heron_additivity"].check(relative_error(result.area, total));
    }
}

VerificationReport verify_one(const CyclicPolygon& poly,
                              const std::map<std::string, double>& tolerances,
                              std::int64_t seed,
                              const PolygonSpec& replay) {
    SuiteErrors errors;
    try {
        run_suite(poly, errors);
    } catch (const std::exception&) {
        // A throwing identity is a failure entry, not an exception.
        for (const IdentityDefault& d : kSuite) {
            Probe& probe = errors[d.name];
            probe.trials = std::max(probe.trials, 1L);
            probe.max_err = std::numeric_limits<double>::infinity();
        }
    }

    VerificationReport report;
    report.pass = true;
    for (const IdentityDefault& d : kSuite) {
        const Probe& probe = errors[d.name];
        IdentityRecord rec;
        rec.name = d.name;
        rec.trials = probe.trials;
        rec.max_rel_err = probe.max_err;
        rec.tolerance = tolerances.at(d.name);
        rec.pass = probe.trials == 0 || probe.max_err <= rec.tolerance;
        if (probe.trials > 0) {
            rec.worst_seed = seed;
            rec.worst_spec = replay;
        }
        report.pass = report.pass && rec.pass;
        report.identities.push_back(std::move(rec));
    }
    return report;
}

PolygonSpec replay_spec_for(const CyclicPolygon& poly) {
    PolygonSpec spec;
    spec.kind = SpecKind::CentralAngles;
    spec.radius = poly.circle().radius;
    spec.gaps = poly.gaps();
    return spec;
}

void validate_config(const FuzzConfig& config) {
    if (config.seed_count < 1)
        throw InvalidInputError("fuzz config needs seed_count >= 1");
    if (config.vertex_counts.empty())
        throw InvalidInputError("fuzz config needs at least one vertex count");
    for (int vc : config.vertex_counts)
        if (vc < 3)
            throw InvalidInputError("fuzz vertex counts must be at least 3");
    if (!(std::isfinite(config.radius) && config.radius > 0.0))
        throw InvalidInputError("fuzz radius must be positive and finite");
    if (config.near_degenerate && !(std::isfinite(config.pinch_gap) && config.pinch_gap > 0.0))
        throw InvalidInputError("pinch gap must be positive and finite");
}

} // namespace

double relative_error(double x, double y) {
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

VerificationReport verify_polygon(const CyclicPolygon& poly, const ToleranceOverrides& overrides) {
    const auto tolerances = effective_tolerances(overrides);
    VerificationReport report = verify_one(poly, tolerances, -1, replay_spec_for(poly));
    report.config.seed_count = 0;
    report.config.vertex_counts = {static_cast<int>(poly.vertex_count())};
    report.config.radius = poly.circle().radius;
    report.config.tolerance_overrides = overrides;
    return report;
}

VerificationReport merge_reports(const VerificationReport& a, const VerificationReport& b) {
    if (a.identities.size() != b.identities.size())
        throw InvalidInputError("cannot merge reports over different identity suites");
    VerificationReport out = a;
    out.pass = a.pass && b.pass;
    for (std::size_t i = 0; i < out.identities.size(); ++i) {
        IdentityRecord& lhs = out.identities[i];
        const IdentityRecord& rhs = b.identities[i];
        if (lhs.name != rhs.name || lhs.tolerance != rhs.tolerance)
            throw InvalidInputError("cannot merge reports with mismatched identities or tolerances");
        const long lhs_trials = lhs.trials;
        lhs.trials += rhs.trials;
        // Worse error wins; on a tie the smaller seed does, which keeps the
        // fold order-independent.
        bool rhs_wins = false;
        if (rhs.trials > 0) {
            if (lhs_trials == 0)
                rhs_wins = true;
            else if (rhs.max_rel_err != lhs.max_rel_err)
                rhs_wins = rhs.max_rel_err > lhs.max_rel_err;
            else
                rhs_wins = rhs.worst_seed < lhs.worst_seed;
        }
        if (rhs_wins) {
            lhs.max_rel_err = rhs.max_rel_err;
            lhs.worst_seed = rhs.worst_seed;
            lhs.worst_spec = rhs.worst_spec;
        }
        lhs.pass = lhs.pass && rhs.pass;
    }
    return out;
}

VerificationReport fuzz(const FuzzConfig& config) {
    validate_config(config);
    const auto tolerances = effective_tolerances(config.tolerance_overrides);

    std::optional<VerificationReport> merged;
    for (int vc : config.vertex_counts) {
        for (int i = 0; i < config.seed_count; ++i) {
            const std::uint64_t seed = config.seed_start + static_cast<std::uint64_t>(i);
            std::vector<double> gaps = random_gaps(seed, vc);
            PolygonSpec spec;
            if (config.near_degenerate) {
                // Pinch the first gap and rescale the rest to keep the turn
                // closed; the replay spec captures the pinched gaps directly.
                const double target = std::max(config.pinch_gap, CyclicPolygon::kMinGap);
                const double scale = (kTwoPi - target) / (kTwoPi - gaps[0]);
                for (std::size_t g = 1; g < gaps.size(); ++g)
                    gaps[g] *= scale;
                gaps[0] = target;
                spec.kind = SpecKind::CentralAngles;
                spec.radius = config.radius;
                spec.gaps = gaps;
            } else {
                spec.kind = SpecKind::Random;
                spec.seed = seed;
                spec.vertex_count = vc;
                spec.radius = config.radius;
            }
            const CyclicPolygon poly = from_central_angles(config.radius, gaps);
            VerificationReport report =
                verify_one(poly, tolerances, static_cast<std::int64_t>(seed), spec);
            merged = merged ? merge_reports(*merged, report) : std::move(report);
        }
    }
    merged->config = config;
    return *merged;
}

void write_report(JsonWriter& w, const VerificationReport& report) {
    w.begin_object();
    w.key("pass");
    w.value(report.pass);
    w.key("config");
    w.begin_object();
    w.key("seed_start");
    w.value(report.config.seed_start);
    w.key("seed_count");
    w.value(report.config.seed_count);
    w.key("vertex_counts");
    w.begin_array();
    for (int vc : report.config.vertex_counts)
        w.value(vc);
    w.end_array();
    w.key("radius");
    w.value(report.config.radius);
    w.key("near_degenerate");
    w.value(report.config.near_degenerate);
    w.key("pinch_gap");
    w.value(report.config.pinch_gap);
    w.key("tolerances");
    w.begin_object();
    for (const IdentityRecord& rec : report.identities) {
        w.key(rec.name);
        w.value(rec.tolerance);
    }
    w.end_object();
    w.end_object();
    w.key("identities");
    w.begin_object();
    for (const IdentityRecord& rec : report.identities) {
        w.key(rec.name);
        w.begin_object();
        w.key("trials");
        w.value(static_cast<std::int64_t>(rec.trials));
        w.key("max_rel_err");
        w.value(rec.max_rel_err);
        w.key("worst_seed");
        w.value(rec.worst_seed);
        w.key("worst_spec");
        if (rec.worst_spec)
            write_spec(w, *rec.worst_spec);
        else
            w.null();
        w.key("pass");
        w.value(rec.pass);
        w.end_object();
    }
    w.end_object();
    w.end_object();
}

std::string report_to_json(const VerificationReport& report) {
    JsonWriter w;
    write_report(w, report);
    return w.str();
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "verification: " << (report.pass ? "PASS" : "FAIL") << "\n";
    for (const IdentityRecord& rec : report.identities) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-28s trials %-8ld max_rel_err %-12.5g tol %-8.3g %s\n",
                      rec.name.c_str(), rec.trials, rec.max_rel_err, rec.tolerance,
                      rec.pass ? "pass" : "FAIL");
        out << line;
    }
    return out.str();
}

} // namespace cyclarea
