#include "mdual/dual_algebraic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mdual/geometry.hpp"

namespace mdual {

double directed_area_factor(int dim) { return 2.0 / (static_cast<double>(dim) * (dim + 1)); }

FieldMode mode_for_dimension(int dim) { return dim <= 4 ? FieldMode::Proven : FieldMode::Conjecture; }

CellNormals cell_normals(const Triangulation& t, Execution execution, kernels::Backend backend, unsigned threads) {
    const int d = t.dim();
    for (Index c = 0; c < static_cast<Index>(t.num_cells()); ++c) {
        CellPoints cp = t.cell_points(c);
        if (is_degenerate(cp.span())) {
            std::ostringstream os;
            os << "cell " << c << " is degenerate (hypervolume " << t.cell_volume(c)
               << "); dual metrics are undefined";
            throw MeshError(MeshErrorKind::DegenerateCell, os.str());
        }
    }

    const std::size_t nv = static_cast<std::size_t>(d) + 1;
    std::vector<double> data(t.cells_flat().size() * d);
    const kernels::Backend chosen = kernels::resolve(backend);
    if (execution == Execution::Sequential) {
        kernels::opposite_facet_normals(d, t.points(), t.cells_flat(), data, chosen);
        return {d, std::move(data)};
    }

    const std::size_t num_cells = t.num_cells();
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(num_cells, 1)));
    const std::size_t chunk = (num_cells + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(num_cells, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            kernels::opposite_facet_normals(d, t.points(), t.cells_flat().subspan(begin * nv, (end - begin) * nv),
                                            std::span<double>(data).subspan(begin * nv * d, (end - begin) * nv * d),
                                            chosen);
        });
    }
    for (auto& th : pool) th.join();
    return {d, std::move(data)};
}

DualVolumeField dual_volumes(const Triangulation& t) {
    DualVolumeField f;
    f.volumes.assign(t.num_points(), 0.0);
    const double w = 1.0 / (t.dim() + 1);
    for (Index c = 0; c < static_cast<Index>(t.num_cells()); ++c) {
        for (Index v : t.cell(c)) f.volumes[v] += w * t.cell_volume(c);
    }
    return f;
}

DirectedAreaField directed_area_field(const Triangulation& t, const AccumulateOptions& options) {
    const int d = t.dim();
    DirectedAreaField field;
    field.dim = d;
    field.factor = directed_area_factor(d);
    field.boundary_corrected = options.boundary_correction;
    field.mode = mode_for_dimension(d);
    if (field.mode == FieldMode::Conjecture) {
        field.notice = "d = " + std::to_string(d) +
                       ": directed-area factor 2/(d(d+1)) is conjectural above d = 4; compare against the explicit "
                       "construction before relying on it";
    }
    field.n.assign(t.num_edges(), Vec(d));

    const CellNormals normals = cell_normals(t, options.execution, options.backend, options.threads);

    // Cell pass: each (j, k) pair of a cell with j < k receives factor * n_j^T.
    for (Index c = 0; c < static_cast<Index>(t.num_cells()); ++c) {
        auto verts = t.cell(c);
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; b <= d; ++b) {
                if (a == b || verts[a] > verts[b]) continue;
                const Index e = *t.find_edge(verts[a], verts[b]);
                field.n[e] += field.factor * normals.at(c, a);
            }
        }
    }

    if (options.boundary_correction) {
        const double half = 0.5 * field.factor;
        for (Index f : t.boundary_facets()) {
            const Vec nb = t.boundary_facet_outward_normal(f);
            auto fv = t.facet_vertices(f);
            for (std::size_t a = 0; a < fv.size(); ++a) {
                for (std::size_t b = a + 1; b < fv.size(); ++b) {
                    field.n[*t.find_edge(fv[a], fv[b])] += half * nb;
                }
            }
        }
    }
    return field;
}

DirectedAreaField directed_area_field(const Triangulation& t, bool apply_boundary_correction) {
    AccumulateOptions opts;
    opts.boundary_correction = apply_boundary_correction;
    return directed_area_field(t, opts);
}

Vec directed_area(const Triangulation& t, const DirectedAreaField& field, Index j, Index k) {
    const Index e = t.edge_id(j, k);
    return j < k ? field.n[e] : -field.n[e];
}

void check_field_matches(const Triangulation& t, const DirectedAreaField& field) {
    if (field.dim != t.dim() || field.n.size() != t.num_edges()) {
        throw std::invalid_argument("directed-area field does not belong to this mesh (dimension " +
                                    std::to_string(field.dim) + ", " + std::to_string(field.n.size()) +
                                    " edges; mesh has dimension " + std::to_string(t.dim()) + ", " +
                                    std::to_string(t.num_edges()) + " edges)");
    }
    for (const Vec& v : field.n) {
        if (v.dim() != t.dim()) throw std::invalid_argument("directed-area field entry has wrong dimension");
    }
}

IdentityVolumes dual_volume_via_identity(const Triangulation& t, const DirectedAreaField& field, IdentityForm form) {
    check_field_matches(t, field);
    const int d = t.dim();
    IdentityVolumes out;
    out.field.volumes.assign(t.num_points(), 0.0);
    out.boundary_node.assign(t.num_points(), false);

    if (form == IdentityForm::FirstLine) {
        const CellNormals normals = cell_normals(t);
        const double w = 1.0 / (static_cast<double>(d) * d * (d + 1));
        for (Index c = 0; c < static_cast<Index>(t.num_cells()); ++c) {
            auto verts = t.cell(c);
            for (int a = 0; a <= d; ++a) {
                const Vec na = normals.at(c, a);
                for (int b = 0; b <= d; ++b) {
                    if (a == b) continue;
                    out.field.volumes[verts[a]] += w * dot(t.point(verts[b]) - t.point(verts[a]), na);
                }
            }
        }
        return out;
    }

    const double w = 1.0 / (2.0 * d);
    for (Index e = 0; e < static_cast<Index>(t.num_edges()); ++e) {
        const Edge& ed = t.edges()[e];
        const double s = dot(t.point(ed.b) - t.point(ed.a), field.n[e]);
        // (p_a - p_b) . n_ba = (p_b - p_a) . n_ab, so both ends gain the same term.
        out.field.volumes[ed.a] += w * s;
        out.field.volumes[ed.b] += w * s;
    }
    for (Index j = 0; j < static_cast<Index>(t.num_points()); ++j) out.boundary_node[j] = t.is_boundary_vertex(j);
    return out;
}

}  // namespace mdual
