#include "mdual/mesh.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "mdual/geometry.hpp"

namespace mdual {

namespace {

std::string cell_label(Index c, std::span<const Index> verts) {
    std::ostringstream os;
    os << "cell " << c << " (";
    for (std::size_t i = 0; i < verts.size(); ++i) os << (i ? " " : "") << verts[i];
    os << ")";
    return os.str();
}

std::string facet_label(const Facet& f, int d) {
    std::ostringstream os;
    os << "facet (";
    for (int i = 0; i < d; ++i) os << (i ? " " : "") << f.vertices[i];
    os << ")";
    return os.str();
}

Adjacency make_adjacency(std::size_t rows, std::vector<std::pair<Index, Index>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    Adjacency adj;
    adj.offsets.assign(rows + 1, 0);
    for (const auto& [r, _] : pairs) ++adj.offsets[r + 1];
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.items.reserve(pairs.size());
    for (const auto& [_, v] : pairs) adj.items.push_back(v);
    return adj;
}

// Unscaled normal of the hyperplane through the d points listed in `facet`.
Vec facet_plane_normal(std::span<const Vec> points, std::span<const Index> facet) {
    const int d = static_cast<int>(facet.size());
    std::array<Vec, kMaxDim> span_vecs;
    for (int i = 1; i < d; ++i) span_vecs[i - 1] = points[facet[i]] - points[facet[0]];
    return generalized_cross(std::span<const Vec>(span_vecs.data(), d - 1));
}

}  // namespace

Triangulation Triangulation::build(int dim, std::vector<Vec> points, std::vector<Index> cells,
                                   ValidationOptions options) {
    if (dim < 2 || dim > kMaxMeshDim) {
        throw MeshError(MeshErrorKind::BadInput,
                        "dimension " + std::to_string(dim) + " outside supported range [2, " +
                            std::to_string(kMaxMeshDim) + "]");
    }
    const std::size_t nv = static_cast<std::size_t>(dim) + 1;
    if (points.empty()) throw MeshError(MeshErrorKind::BadInput, "mesh has no points");
    if (cells.empty()) throw MeshError(MeshErrorKind::BadInput, "mesh has no cells");
    if (cells.size() % nv != 0) {
        throw MeshError(MeshErrorKind::BadInput, "cell index array length is not a multiple of d+1");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].dim() != dim) {
            throw MeshError(MeshErrorKind::BadInput, "point " + std::to_string(i) + " has " +
                                                         std::to_string(points[i].dim()) +
                                                         " coordinates, expected " + std::to_string(dim));
        }
    }

    Triangulation t;
    t.dim_ = dim;
    t.points_ = std::move(points);
    t.cells_ = std::move(cells);
    const Index L = static_cast<Index>(t.points_.size());
    const Index C = static_cast<Index>(t.cells_.size() / nv);

    for (Index c = 0; c < C; ++c) {
        auto verts = t.cell(c);
        for (std::size_t a = 0; a < nv; ++a) {
            if (verts[a] < 0 || verts[a] >= L) {
                throw MeshError(MeshErrorKind::IndexOutOfRange,
                                cell_label(c, verts) + " references point " + std::to_string(verts[a]) +
                                    " outside [0, " + std::to_string(L) + ")");
            }
            for (std::size_t b = 0; b < a; ++b) {
                if (verts[a] == verts[b]) {
                    throw MeshError(MeshErrorKind::RepeatedVertex,
                                    cell_label(c, verts) + " lists point " + std::to_string(verts[a]) + " twice");
                }
            }
        }
    }

    t.cell_volume_.resize(C);
    for (Index c = 0; c < C; ++c) {
        CellPoints cp = t.cell_points(c);
        t.cell_volume_[c] = simplex_hypervolume(cp.span());
        if (options.strict && is_degenerate(cp.span())) {
            std::ostringstream os;
            os << cell_label(c, t.cell(c)) << " is degenerate (hypervolume " << t.cell_volume_[c] << ")";
            throw MeshError(MeshErrorKind::DegenerateCell, os.str());
        }
    }

    // Edges, sorted lexicographically.
    std::vector<std::pair<Index, Index>> edge_cell_pairs;
    for (Index c = 0; c < C; ++c) {
        auto verts = t.cell(c);
        for (std::size_t a = 0; a < nv; ++a) {
            for (std::size_t b = a + 1; b < nv; ++b) {
                t.edges_.push_back({std::min(verts[a], verts[b]), std::max(verts[a], verts[b])});
            }
        }
    }
    std::sort(t.edges_.begin(), t.edges_.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    t.edges_.erase(std::unique(t.edges_.begin(), t.edges_.end()), t.edges_.end());

    for (Index c = 0; c < C; ++c) {
        auto verts = t.cell(c);
        for (std::size_t a = 0; a < nv; ++a) {
            for (std::size_t b = a + 1; b < nv; ++b) {
                edge_cell_pairs.emplace_back(*t.find_edge(verts[a], verts[b]), c);
            }
        }
    }
    t.edge_cells_ = make_adjacency(t.edges_.size(), std::move(edge_cell_pairs));

    std::vector<std::pair<Index, Index>> vc;
    vc.reserve(t.cells_.size());
    for (Index c = 0; c < C; ++c) {
        for (Index v : t.cell(c)) vc.emplace_back(v, c);
    }
    t.vertex_cells_ = make_adjacency(L, std::move(vc));

    std::vector<std::pair<Index, Index>> vn;
    vn.reserve(2 * t.edges_.size());
    for (const Edge& e : t.edges_) {
        vn.emplace_back(e.a, e.b);
        vn.emplace_back(e.b, e.a);
    }
    t.vertex_neighbors_ = make_adjacency(L, std::move(vn));

    // Facets: gather (sorted key, cell, opposite local) and group equal keys.
    struct FacetRecord {
        std::array<Index, kMaxDim> key{};
        Index cell;
        int opposite;
    };
    std::vector<FacetRecord> recs;
    recs.reserve(static_cast<std::size_t>(C) * nv);
    for (Index c = 0; c < C; ++c) {
        auto verts = t.cell(c);
        for (int j = 0; j <= dim; ++j) {
            FacetRecord r{{}, c, j};
            int n = 0;
            for (int i = 0; i <= dim; ++i) {
                if (i != j) r.key[n++] = verts[i];
            }
            std::sort(r.key.begin(), r.key.begin() + dim);
            recs.push_back(r);
        }
    }
    std::sort(recs.begin(), recs.end(), [](const FacetRecord& x, const FacetRecord& y) {
        return std::tie(x.key, x.cell) < std::tie(y.key, y.cell);
    });
    for (std::size_t i = 0; i < recs.size();) {
        std::size_t end = i;
        while (end < recs.size() && recs[end].key == recs[i].key) ++end;
        Facet f;
        f.vertices = recs[i].key;
        f.num_cells = static_cast<int>(end - i);
        for (std::size_t r = i; r < end && r - i < 2; ++r) {
            f.cells[r - i] = recs[r].cell;
            f.opposite_local[r - i] = recs[r].opposite;
        }
        if (f.num_cells > 2 && options.strict) {
            std::ostringstream os;
            os << facet_label(f, dim) << " is shared by " << f.num_cells << " cells:";
            for (std::size_t r = i; r < end; ++r) os << " " << recs[r].cell;
            throw MeshError(MeshErrorKind::NonManifoldFacet, os.str());
        }
        if (f.num_cells == 2 && options.strict) {
            std::span<const Index> fv(f.vertices.data(), dim);
            const Vec n = facet_plane_normal(t.points_, fv);
            const Vec& base = t.points_[fv[0]];
            const double s0 = dot(n, t.points_[t.cell(f.cells[0])[f.opposite_local[0]]] - base);
            const double s1 = dot(n, t.points_[t.cell(f.cells[1])[f.opposite_local[1]]] - base);
            if (!(s0 * s1 < 0.0)) {
                throw MeshError(MeshErrorKind::FoldedFacet,
                                facet_label(f, dim) + ": cells " + std::to_string(f.cells[0]) + " and " +
                                    std::to_string(f.cells[1]) + " lie on the same side");
            }
        }
        if (f.is_boundary()) t.boundary_facets_.push_back(static_cast<Index>(t.facets_.size()));
        t.facets_.push_back(f);
        i = end;
    }

    std::vector<std::pair<Index, Index>> vb;
    for (Index f : t.boundary_facets_) {
        for (Index v : t.facet_vertices(f)) vb.emplace_back(v, f);
    }
    t.vertex_boundary_facets_ = make_adjacency(L, std::move(vb));
    return t;
}

CellPoints Triangulation::cell_points(Index c) const {
    CellPoints cp;
    for (Index v : cell(c)) cp.pts[cp.count++] = points_[v];
    return cp;
}

double Triangulation::total_volume() const {
    double s = 0.0;
    for (double v : cell_volume_) s += v;
    return s;
}

std::optional<Index> Triangulation::find_edge(Index j, Index k) const {
    const Edge key{std::min(j, k), std::max(j, k)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& x, const Edge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    if (it == edges_.end() || !(*it == key) || j == k) return std::nullopt;
    return static_cast<Index>(it - edges_.begin());
}

Index Triangulation::edge_id(Index j, Index k) const {
    if (auto e = find_edge(j, k)) return *e;
    throw MeshError(MeshErrorKind::NotAnEdge,
                    "points " + std::to_string(j) + " and " + std::to_string(k) + " are not joined by an edge");
}

std::span<const Index> Triangulation::cells_sharing_edge(Index j, Index k) const {
    return edge_cells_.row(edge_id(j, k));
}

Vec Triangulation::boundary_facet_outward_normal(Index f) const {
    if (f < 0 || static_cast<std::size_t>(f) >= facets_.size() || !facets_[f].is_boundary()) {
        throw MeshError(MeshErrorKind::NotABoundaryFacet, "facet " + std::to_string(f) + " is not a boundary facet");
    }
    const Facet& fc = facets_[f];
    std::span<const Index> fv(fc.vertices.data(), dim_);
    Vec n = facet_plane_normal(points_, fv) * (1.0 / factorial(dim_ - 1));
    const Vec& apex = points_[cell(fc.cells[0])[fc.opposite_local[0]]];
    if (dot(points_[fv[0]] - apex, n) < 0.0) n *= -1.0;
    return n;
}

double Triangulation::mean_boundary_facet_area() const {
    if (boundary_facets_.empty()) return 0.0;
    double s = 0.0;
    for (Index f : boundary_facets_) s += norm(boundary_facet_outward_normal(f));
    return s / static_cast<double>(boundary_facets_.size());
}

}  // namespace mdual
