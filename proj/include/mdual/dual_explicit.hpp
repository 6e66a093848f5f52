#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdual/geometry.hpp"
#include "mdual/mesh.hpp"
#include "mdual/vec.hpp"

// Brute-force median-dual construction. Each dual piece is a combinatorial
// cube of centroids, split into simplices by the Coxeter-Freudenthal-Kuhn
// (CFK) permutation construction and summed piece by piece. Shares no code
// path with dual_algebraic beyond the vector primitives.
namespace mdual {

/// Bit i set means the i-th "free" vertex of the cube's parent simplex is in
/// the subset.
using SubsetMask = std::uint32_t;

/// One simplex of a CFK triangulation of the m-cube: m+1 cube corners along a
/// monotone path, and the orientation of that path relative to the cube.
struct CfkSimplex {
    std::vector<SubsetMask> corners;
    int sign = 1;
};

/// All m! simplices of the CFK triangulation of the m-cube, one per permutation
/// pi of the axes (lexicographic order). The path starts at corner `base` and
/// flips bit pi(1), then pi(2), ...; `sign` is parity(pi) times (-1)^|base| so
/// that sign * det(path) has the same sign for every piece.
std::vector<CfkSimplex> cfk_triangulate(int m, SubsetMask base = 0);

/// Dual facet of edge (j, k) inside one cell: corners c_S are the centroids of
/// {p_j, p_k} united with subset S of the remaining d-1 cell vertices.
struct CuboidFacet {
    Index j = 0;
    Index k = 0;
    Index cell = 0;
    std::vector<Index> others;  // free vertices, in cell-local order
    std::vector<Vec> corners;   // 2^(d-1) entries indexed by SubsetMask
    Vec edge;                   // p_k - p_j
};

/// Dual-cell piece of node j inside one cell: corners c_S are the centroids of
/// {p_j} united with subset S of the other d cell vertices (c_0 = p_j).
struct DualCellCuboid {
    Index node = 0;
    Index cell = 0;
    std::vector<Index> others;
    std::vector<Vec> corners;  // 2^d entries
};

/// Throws MeshError if j, k are not both vertices of `cell`.
CuboidFacet make_cuboid_facet(const Triangulation& t, Index cell, Index j, Index k);
DualCellCuboid make_dual_cell_cuboid(const Triangulation& t, Index cell, Index j);

/// Sum of the CFK pieces' normals (each 1/(d-1)! times the generalized cross
/// product of its spanning vectors, weighted by the piece's sign), negated if
/// needed so that it points from p_j towards p_k. Throws std::domain_error when
/// the sum vanishes.
Vec lumped_normal(const CuboidFacet& facet, SubsetMask base = 0);

struct CuboidVolume {
    double volume = 0.0;         // sum of unsigned piece volumes
    double signed_volume = 0.0;  // sum of sign-corrected piece volumes
    std::size_t inverted_pieces = 0;
};

CuboidVolume cuboid_volume(const DualCellCuboid& cuboid, SubsetMask base = 0);

/// Sum over the cells sharing edge (j, k) of their facet's lumped normal.
/// Throws MeshError(NotAnEdge).
Vec explicit_directed_area(const Triangulation& t, Index j, Index k);

struct ExplicitVolume {
    double volume = 0.0;
    std::size_t inverted_pieces = 0;
};

/// Hypervolume of the median-dual region of node j, assembled piece by piece.
ExplicitVolume explicit_dual_volume(const Triangulation& t, Index j);

}  // namespace mdual
