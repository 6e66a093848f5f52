#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdual/vec.hpp"

namespace mdual {

using Index = std::int32_t;

/// Largest simplicial dimension the mesh accepts (a cell then has kMaxDim vertices).
inline constexpr int kMaxMeshDim = kMaxDim - 1;

enum class MeshErrorKind {
    BadInput,
    IndexOutOfRange,
    RepeatedVertex,
    DegenerateCell,
    NonManifoldFacet,
    FoldedFacet,
    NotAnEdge,
    NotABoundaryFacet,
};

class MeshError : public std::runtime_error {
public:
    MeshError(MeshErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    MeshErrorKind kind() const { return kind_; }

private:
    MeshErrorKind kind_;
};

/// Undirected edge stored with a < b.
struct Edge {
    Index a = 0;
    Index b = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A (d-1)-facet keyed by its sorted vertex tuple. Boundary facets have one
/// incident cell; interior facets two.
struct Facet {
    std::array<Index, kMaxDim> vertices{};  // first d entries, ascending
    std::array<Index, 2> cells{-1, -1};
    std::array<int, 2> opposite_local{-1, -1};  // local index in each cell of the vertex off the facet
    int num_cells = 0;

    bool is_boundary() const { return num_cells == 1; }
};

struct ValidationOptions {
    /// Strict mode rejects degenerate cells, facets with three or more cells,
    /// and interior facets whose two cells sit on the same side.
    bool strict = true;
};

/// Small owning copy of one cell's vertex coordinates.
struct CellPoints {
    std::array<Vec, kMaxDim + 1> pts;
    int count = 0;
    std::span<const Vec> span() const { return {pts.data(), static_cast<std::size_t>(count)}; }
};

/// Compressed row storage for the incidence lists.
struct Adjacency {
    std::vector<std::size_t> offsets{0};
    std::vector<Index> items;

    std::span<const Index> row(std::size_t i) const {
        return {items.data() + offsets[i], offsets[i + 1] - offsets[i]};
    }
    std::size_t rows() const { return offsets.size() - 1; }
};

/// Immutable d-simplicial triangulation with its derived incidence.
class Triangulation {
public:
    /// Validates and indexes the mesh. `cells` holds (d+1) point indices per
    /// cell, row after row. Throws MeshError naming the offending entity.
    static Triangulation build(int dim, std::vector<Vec> points, std::vector<Index> cells,
                               ValidationOptions options = {});

    int dim() const { return dim_; }
    std::size_t num_points() const { return points_.size(); }
    std::size_t num_cells() const { return cell_volume_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_interior_facets() const { return facets_.size() - boundary_facets_.size(); }
    std::size_t num_boundary_facets() const { return boundary_facets_.size(); }

    const Vec& point(Index i) const { return points_[i]; }
    std::span<const Vec> points() const { return points_; }
    std::span<const Index> cells_flat() const { return cells_; }
    std::span<const Index> cell(Index c) const {
        return {cells_.data() + static_cast<std::size_t>(c) * (dim_ + 1), static_cast<std::size_t>(dim_ + 1)};
    }
    CellPoints cell_points(Index c) const;
    double cell_volume(Index c) const { return cell_volume_[c]; }
    double total_volume() const;

    std::span<const Edge> edges() const { return edges_; }
    std::optional<Index> find_edge(Index j, Index k) const;
    /// Throws MeshError(NotAnEdge).
    Index edge_id(Index j, Index k) const;

    std::span<const Index> cells_sharing_vertex(Index j) const { return vertex_cells_.row(j); }
    std::span<const Index> cells_of_edge(Index e) const { return edge_cells_.row(e); }
    /// Throws MeshError(NotAnEdge) when j and k are not joined by an edge.
    std::span<const Index> cells_sharing_edge(Index j, Index k) const;
    /// Edge neighbours of j, ascending.
    std::span<const Index> neighbors(Index j) const { return vertex_neighbors_.row(j); }

    std::span<const Facet> facets() const { return facets_; }
    /// Ids into facets() of the boundary facets, ascending.
    std::span<const Index> boundary_facets() const { return boundary_facets_; }
    std::span<const Index> boundary_facets_of_vertex(Index j) const { return vertex_boundary_facets_.row(j); }
    bool is_boundary_vertex(Index j) const { return !vertex_boundary_facets_.row(j).empty(); }
    std::span<const Index> facet_vertices(Index f) const {
        return {facets_[f].vertices.data(), static_cast<std::size_t>(dim_)};
    }

    /// Normal of boundary facet `f` with length equal to its (d-1)-volume and
    /// pointing out of the domain. Throws MeshError(NotABoundaryFacet).
    Vec boundary_facet_outward_normal(Index f) const;

    double mean_boundary_facet_area() const;

private:
    Triangulation() = default;

    int dim_ = 0;
    std::vector<Vec> points_;
    std::vector<Index> cells_;
    std::vector<double> cell_volume_;
    std::vector<Edge> edges_;
    Adjacency edge_cells_;
    Adjacency vertex_cells_;
    Adjacency vertex_neighbors_;
    std::vector<Facet> facets_;
    std::vector<Index> boundary_facets_;
    Adjacency vertex_boundary_facets_;
};

}  // namespace mdual
