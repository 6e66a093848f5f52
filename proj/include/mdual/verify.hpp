#pragma once

#include <limits>
#include <string>
#include <vector>

#include "mdual/dual_algebraic.hpp"
#include "mdual/mesh.hpp"

namespace mdual {

/// Boundary weight that closes every node: each boundary facet has d vertices
/// and the median split hands |B|/d to each.
double default_boundary_coefficient(int dim);
/// 1/(d+1) (1/5 in 4D): one share per cell vertex. Leaves boundary nodes
/// open; kept so that weight can be compared against the default.
double alternate_boundary_coefficient(int dim);

struct ClosureResult {
    double coefficient = 0.0;
    std::vector<Vec> residuals;  // a_j per node
    double max_norm = 0.0;
    double max_norm_interior = 0.0;
};

/// a_j = sum over edges (+n_jk at j, -n_jk at k) + coefficient * sum_{B ni j} n_B.
/// Zero everywhere means the directed areas close every dual cell.
ClosureResult closure_check(const Triangulation& t, const DirectedAreaField& field, double boundary_coefficient);

struct FieldComparison {
    std::vector<double> rel_err;  // per edge
    double max_rel_err = 0.0;
    Index worst_edge = -1;
    double floor = 0.0;  // denominator floor, from the mean reference magnitude
};

/// Per-edge ||a - b|| / max(||b||, floor) against `reference`.
FieldComparison compare_fields(const Triangulation& t, const DirectedAreaField& field,
                               const std::vector<Vec>& reference);
/// Compares against a fresh explicit (CFK) construction of every edge.
FieldComparison compare_fields(const Triangulation& t, const DirectedAreaField& field);

std::vector<Vec> explicit_field(const Triangulation& t);

/// |sum_j V_j - sum_T |T||.
double conservation_check(const Triangulation& t, const DualVolumeField& volumes);

struct Tolerances {
    double closure = 1e-12;       // times mean boundary-facet hyperarea
    double field = 1e-12;         // relative
    double volume = 1e-12;        // relative
    double conservation = 1e-12;  // times total volume
    double identity = 1e-12;      // relative
};

struct VerifyOptions {
    /// Gating closure weight; NaN selects default_boundary_coefficient(d).
    double boundary_coefficient = std::numeric_limits<double>::quiet_NaN();
    /// Run the closure with alternate_boundary_coefficient(d) instead, reported
    /// but not gating.
    bool alternate_coefficient = false;
    AccumulateOptions accumulate;
    Tolerances tol;
};

struct CheckResult {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool gating = true;
    bool pass = true;
};

struct VerificationReport {
    int dim = 0;
    FieldMode mode = FieldMode::Proven;

    double closure_coefficient = 0.0;
    double closure_max = 0.0;
    double closure_scale = 0.0;
    std::vector<Vec> closure_residuals;
    double alternate_coefficient = 0.0;
    double alternate_closure_max = 0.0;

    double field_max_rel_err = 0.0;
    Index field_worst_edge = -1;
    double volume_max_rel_err = 0.0;
    double conservation_deficit = 0.0;
    double total_volume = 0.0;
    double first_line_max_rel_err = 0.0;
    double edge_field_interior_max_rel_err = 0.0;
    double edge_field_boundary_max_rel_err = 0.0;  // corrected field; measured, never gating

    std::size_t inverted_pieces = 0;
    std::vector<std::string> warnings;
    std::vector<CheckResult> checks;
    bool pass = false;
};

VerificationReport verify(const Triangulation& t, const VerifyOptions& options = {});

}  // namespace mdual
