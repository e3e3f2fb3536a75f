#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclarea/geometry.hpp"
#include "cyclarea/spec_io.hpp"

namespace cyclarea {

/// |x - y| / max(|x|, |y|, 1e-300).
double relative_error(double x, double y);

/// One verified identity. The suite runs every identity exactly once per
/// report; an identity that does not apply to a polygon keeps trials at 0 and
/// passes vacuously. The default tolerances:
///   oracle_equivalence          1e-8    area formula vs shoelace
///   apex_independence           1e-8    area spread across all apices
///   chain_constraint            1e-10   s_i + t_i = s_{i+1} + r_{i+1}
///   pair_product_first_form     1e-9    s_h t_h s_k r_k prod s_i/p_i
///   pair_product_second_form    1e-9    p_h r_h p_k t_k prod p_i/s_i
///   inradius_chain              1e-9    rho_h rho_k = r_h t_k prod p_i/s_i
///   triangle_area_identity      1e-11   area = rho * p per triangle
///   triangle_inradius_identity  1e-12   rho = area / p per triangle
///   right_triangle_product      1e-10   hypotenuse segments multiply to area
///   pythagorean_identity        1e-10   legs vs hypotenuse via tangent sums
///   reconstruction_round_trip   1e-10   boundary recursion vs stored splits
///   factor_exchange_symmetry    0       exchanged factors match bit for bit
///   brahmagupta_quadrilateral   1e-9    four-sided polygons only
///   heron_additivity            1e-9    factor form vs summed triangle areas
struct IdentityRecord {
    std::string name;
    long trials = 0;
    double max_rel_err = 0.0;
    std::int64_t worst_seed = -1;
    std::optional<PolygonSpec> worst_spec;
    double tolerance = 0.0;
    bool pass = true;
};

using ToleranceOverrides = std::map<std::string, double>;

struct FuzzConfig {
    std::uint64_t seed_start = 0;
    int seed_count = 1000;
    std::vector<int> vertex_counts = {3, 4, 5, 6, 7, 8, 9, 10};
    double radius = 1.0;
    ToleranceOverrides tolerance_overrides;
    /// When set, each trial's first gap is pinched to pinch_gap radians and
    /// the rest rescaled, probing error growth near the degeneracy floor.
    bool near_degenerate = false;
    double pinch_gap = 1e-6;
};

struct VerificationReport {
    std::vector<IdentityRecord> identities;
    bool pass = true;
    FuzzConfig config;
};

/// Runs the whole identity suite on one polygon with apex 0.
VerificationReport verify_polygon(const CyclicPolygon& poly,
                                  const ToleranceOverrides& overrides = {});

/// Seeded grid of trials: every vertex count crossed with every seed, each
/// trial verified like verify_polygon and folded into one report by
/// max-reduction. Deterministic for a fixed config.
VerificationReport fuzz(const FuzzConfig& config);

/// Associative, order-independent fold of two reports over the same identity
/// suite and tolerances: trials add, the worse error wins, ties go to the
/// smaller seed.
VerificationReport merge_reports(const VerificationReport& a, const VerificationReport& b);

void write_report(JsonWriter& writer, const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

} // namespace cyclarea
