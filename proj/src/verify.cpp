#include "mdual/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mdual/dual_explicit.hpp"

namespace mdual {

double default_boundary_coefficient(int dim) { return 1.0 / dim; }

double alternate_boundary_coefficient(int dim) { return 1.0 / (dim + 1); }

ClosureResult closure_check(const Triangulation& t, const DirectedAreaField& field, double boundary_coefficient) {
    check_field_matches(t, field);
    ClosureResult r;
    r.coefficient = boundary_coefficient;
    r.residuals.assign(t.num_points(), Vec(t.dim()));
    for (Index e = 0; e < static_cast<Index>(t.num_edges()); ++e) {
        const Edge& ed = t.edges()[e];
        r.residuals[ed.a] += field.n[e];
        r.residuals[ed.b] -= field.n[e];
    }
    for (Index f : t.boundary_facets()) {
        const Vec nb = boundary_coefficient * t.boundary_facet_outward_normal(f);
        for (Index v : t.facet_vertices(f)) r.residuals[v] += nb;
    }
    for (Index j = 0; j < static_cast<Index>(t.num_points()); ++j) {
        const double a = norm(r.residuals[j]);
        r.max_norm = std::max(r.max_norm, a);
        if (!t.is_boundary_vertex(j)) r.max_norm_interior = std::max(r.max_norm_interior, a);
    }
    return r;
}

std::vector<Vec> explicit_field(const Triangulation& t) {
    std::vector<Vec> out;
    out.reserve(t.num_edges());
    for (const Edge& e : t.edges()) out.push_back(explicit_directed_area(t, e.a, e.b));
    return out;
}

FieldComparison compare_fields(const Triangulation& t, const DirectedAreaField& field,
                               const std::vector<Vec>& reference) {
    check_field_matches(t, field);
    if (reference.size() != field.n.size()) throw std::invalid_argument("compare_fields: edge count mismatch");
    FieldComparison c;
    double mean = 0.0;
    for (const Vec& v : reference) mean += norm(v);
    mean /= std::max<std::size_t>(reference.size(), 1);
    // Guards edges whose dual facet nearly vanishes; scaled to the mesh.
    c.floor = 1e-6 * mean;
    c.rel_err.resize(reference.size());
    for (std::size_t e = 0; e < reference.size(); ++e) {
        const double denom = std::max(norm(reference[e]), c.floor);
        const double err = denom > 0.0 ? norm(field.n[e] - reference[e]) / denom : 0.0;
        c.rel_err[e] = err;
        if (err > c.max_rel_err || c.worst_edge < 0) {
            c.max_rel_err = std::max(c.max_rel_err, err);
            c.worst_edge = static_cast<Index>(e);
        }
    }
    return c;
}

FieldComparison compare_fields(const Triangulation& t, const DirectedAreaField& field) {
    return compare_fields(t, field, explicit_field(t));
}

double conservation_check(const Triangulation& t, const DualVolumeField& volumes) {
    if (volumes.volumes.size() != t.num_points()) throw std::invalid_argument("conservation_check: size mismatch");
    double dual = 0.0;
    for (double v : volumes.volumes) dual += v;
    return std::abs(dual - t.total_volume());
}

namespace {

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& ref, const std::vector<bool>* mask,
                    bool mask_value) {
    double m = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        if (mask && (*mask)[i] != mask_value) continue;
        m = std::max(m, std::abs(a[i] - ref[i]) / std::abs(ref[i]));
    }
    return m;
}

}  // namespace

VerificationReport verify(const Triangulation& t, const VerifyOptions& options) {
    const int d = t.dim();
    VerificationReport r;
    r.dim = d;
    r.mode = mode_for_dimension(d);
    const bool proven = r.mode == FieldMode::Proven;

    AccumulateOptions acc = options.accumulate;
    acc.boundary_correction = true;
    const DirectedAreaField field = directed_area_field(t, acc);
    if (!field.notice.empty()) r.warnings.push_back(field.notice);

    // Closure.
    r.alternate_coefficient = alternate_boundary_coefficient(d);
    r.closure_coefficient = options.alternate_coefficient ? r.alternate_coefficient
                            : std::isnan(options.boundary_coefficient) ? default_boundary_coefficient(d)
                                                                       : options.boundary_coefficient;
    ClosureResult closure = closure_check(t, field, r.closure_coefficient);
    r.closure_max = closure.max_norm;
    r.closure_residuals = std::move(closure.residuals);
    r.alternate_closure_max = closure_check(t, field, r.alternate_coefficient).max_norm;
    r.closure_scale = t.mean_boundary_facet_area();

    // Directed areas against the explicit construction.
    const FieldComparison fc = compare_fields(t, field);
    r.field_max_rel_err = fc.max_rel_err;
    r.field_worst_edge = fc.worst_edge;

    // Volumes: closed form, explicit, and both identity forms.
    const DualVolumeField closed_form = dual_volumes(t);
    std::vector<double> explicit_v(t.num_points());
    for (Index j = 0; j < static_cast<Index>(t.num_points()); ++j) {
        const ExplicitVolume ev = explicit_dual_volume(t, j);
        explicit_v[j] = ev.volume;
        r.inverted_pieces += ev.inverted_pieces;
    }
    if (r.inverted_pieces > 0) {
        r.warnings.push_back(std::to_string(r.inverted_pieces) +
                             " CFK piece(s) of the dual cells have inverted orientation");
    }
    r.volume_max_rel_err = max_rel_diff(closed_form.volumes, explicit_v, nullptr, false);
    r.total_volume = t.total_volume();
    r.conservation_deficit = conservation_check(t, closed_form);

    const IdentityVolumes first = dual_volume_via_identity(t, field, IdentityForm::FirstLine);
    r.first_line_max_rel_err = max_rel_diff(first.field.volumes, closed_form.volumes, nullptr, false);

    const DirectedAreaField interior_field = directed_area_field(t, AccumulateOptions{false, acc.execution, acc.backend, acc.threads});
    const IdentityVolumes edge_int = dual_volume_via_identity(t, interior_field, IdentityForm::EdgeField);
    r.edge_field_interior_max_rel_err = max_rel_diff(edge_int.field.volumes, closed_form.volumes, &edge_int.boundary_node, false);
    const IdentityVolumes edge_bnd = dual_volume_via_identity(t, field, IdentityForm::EdgeField);
    r.edge_field_boundary_max_rel_err = max_rel_diff(edge_bnd.field.volumes, closed_form.volumes, &edge_bnd.boundary_node, true);

    const double closure_scale = r.closure_scale > 0.0 ? r.closure_scale : 1.0;
    auto add = [&](std::string name, double value, double tol, bool gating) {
        r.checks.push_back({std::move(name), value, tol, gating, value <= tol});
    };
    add("closure", r.closure_max, options.tol.closure * closure_scale, proven && !options.alternate_coefficient);
    add("field_vs_explicit", r.field_max_rel_err, options.tol.field, proven);
    add("volume_vs_explicit", r.volume_max_rel_err, options.tol.volume, true);
    add("conservation", r.conservation_deficit, options.tol.conservation * r.total_volume, true);
    add("identity_first_line", r.first_line_max_rel_err, options.tol.identity, true);
    add("identity_edge_field_interior", r.edge_field_interior_max_rel_err, options.tol.identity, proven);
    add("identity_edge_field_boundary", r.edge_field_boundary_max_rel_err, options.tol.identity, false);

    r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.pass || !c.gating; });
    return r;
}

}  // namespace mdual
