#include "mdual/dual_explicit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mdual/geometry.hpp"

namespace mdual {

namespace {

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
            if (perm[a] > perm[b]) ++inversions;
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

int local_index(const Triangulation& t, Index cell, Index v) {
    auto verts = t.cell(cell);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] == v) return static_cast<int>(i);
    }
    throw MeshError(MeshErrorKind::BadInput,
                    "point " + std::to_string(v) + " is not a vertex of cell " + std::to_string(cell));
}

// Corners indexed by subset of `others`: centroid of the fixed points plus the subset.
std::vector<Vec> centroid_corners(const Triangulation& t, std::span<const Index> fixed,
                                  std::span<const Index> others) {
    const std::size_t count = std::size_t{1} << others.size();
    std::vector<Vec> corners(count);
    std::vector<Vec> pts;
    for (std::size_t s = 0; s < count; ++s) {
        pts.clear();
        for (Index f : fixed) pts.push_back(t.point(f));
        for (std::size_t i = 0; i < others.size(); ++i) {
            if (s & (std::size_t{1} << i)) pts.push_back(t.point(others[i]));
        }
        corners[s] = centroid(pts);
    }
    return corners;
}

}  // namespace

std::vector<CfkSimplex> cfk_triangulate(int m, SubsetMask base) {
    if (m < 1 || m > kMaxDim) throw std::invalid_argument("cfk_triangulate: cube dimension out of range");
    const SubsetMask full = (SubsetMask{1} << m) - 1;
    if ((base & ~full) != 0) throw std::invalid_argument("cfk_triangulate: base corner outside the cube");
    const int base_sign = (std::popcount(base) % 2 == 0) ? 1 : -1;

    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<CfkSimplex> out;
    do {
        CfkSimplex s;
        s.corners.reserve(m + 1);
        SubsetMask cur = base;
        s.corners.push_back(cur);
        for (int axis : perm) {
            cur ^= SubsetMask{1} << axis;
            s.corners.push_back(cur);
        }
        s.sign = permutation_parity(perm) * base_sign;
        out.push_back(std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

CuboidFacet make_cuboid_facet(const Triangulation& t, Index cell, Index j, Index k) {
    const int lj = local_index(t, cell, j);
    const int lk = local_index(t, cell, k);
    if (lj == lk) throw std::invalid_argument("make_cuboid_facet: edge endpoints coincide");
    CuboidFacet f;
    f.j = j;
    f.k = k;
    f.cell = cell;
    auto verts = t.cell(cell);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (static_cast<int>(i) != lj && static_cast<int>(i) != lk) f.others.push_back(verts[i]);
    }
    const std::array<Index, 2> fixed{j, k};
    f.corners = centroid_corners(t, fixed, f.others);
    f.edge = t.point(k) - t.point(j);
    return f;
}

DualCellCuboid make_dual_cell_cuboid(const Triangulation& t, Index cell, Index j) {
    const int lj = local_index(t, cell, j);
    DualCellCuboid c;
    c.node = j;
    c.cell = cell;
    auto verts = t.cell(cell);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (static_cast<int>(i) != lj) c.others.push_back(verts[i]);
    }
    const std::array<Index, 1> fixed{j};
    c.corners = centroid_corners(t, fixed, c.others);
    return c;
}

Vec lumped_normal(const CuboidFacet& facet, SubsetMask base) {
    const int d = facet.edge.dim();
    const int m = d - 1;
    const double inv_fact = 1.0 / factorial(m);
    Vec total(d);
    std::array<Vec, kMaxDim> span_vecs;
    for (const CfkSimplex& s : cfk_triangulate(m, base)) {
        const Vec& origin = facet.corners[s.corners[0]];
        for (int i = 1; i <= m; ++i) span_vecs[i - 1] = facet.corners[s.corners[i]] - origin;
        total += generalized_cross(std::span<const Vec>(span_vecs.data(), m)) * (s.sign * inv_fact);
    }
    const double scale = std::pow(norm(facet.edge), m);
    if (norm(total) <= 1e-14 * scale) {
        throw std::domain_error("lumped_normal: dual facet of edge (" + std::to_string(facet.j) + ", " +
                                std::to_string(facet.k) + ") in cell " + std::to_string(facet.cell) +
                                " has vanishing normal");
    }
    if (dot(total, facet.edge) < 0.0) total *= -1.0;
    return total;
}

CuboidVolume cuboid_volume(const DualCellCuboid& cuboid, SubsetMask base) {
    const int d = static_cast<int>(cuboid.others.size());
    const double inv_fact = 1.0 / factorial(d);
    std::vector<double> pieces;
    std::array<Vec, kMaxDim + 1> verts;
    CuboidVolume out;
    for (const CfkSimplex& s : cfk_triangulate(d, base)) {
        for (int i = 0; i <= d; ++i) verts[i] = cuboid.corners[s.corners[i]];
        const double det = simplex_signed_det(std::span<const Vec>(verts.data(), d + 1)) * inv_fact;
        pieces.push_back(s.sign * det);
        out.volume += std::abs(det);
        out.signed_volume += s.sign * det;
    }
    for (double p : pieces) {
        if (p != 0.0 && (p > 0.0) != (out.signed_volume > 0.0)) ++out.inverted_pieces;
    }
    out.signed_volume = std::abs(out.signed_volume);
    return out;
}

Vec explicit_directed_area(const Triangulation& t, Index j, Index k) {
    Vec total(t.dim());
    for (Index c : t.cells_sharing_edge(j, k)) total += lumped_normal(make_cuboid_facet(t, c, j, k));
    return total;
}

ExplicitVolume explicit_dual_volume(const Triangulation& t, Index j) {
    ExplicitVolume out;
    for (Index c : t.cells_sharing_vertex(j)) {
        const CuboidVolume v = cuboid_volume(make_dual_cell_cuboid(t, c, j));
        out.volume += v.volume;
        out.inverted_pieces += v.inverted_pieces;
    }
    return out;
}

}  // namespace mdual
