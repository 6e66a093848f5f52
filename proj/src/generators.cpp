#include "mdual/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "mdual/geometry.hpp"

namespace mdual {

namespace {

MeshData kuhn_lattice(int d, int n) {
    MeshData m;
    m.dim = d;
    const int side = n + 1;
    std::size_t num_points = 1;
    for (int i = 0; i < d; ++i) num_points *= side;
    m.points.reserve(num_points);
    for (std::size_t idx = 0; idx < num_points; ++idx) {
        Vec p(d);
        std::size_t r = idx;
        for (int i = 0; i < d; ++i) {
            p[i] = static_cast<double>(r % side);
            r /= side;
        }
        m.points.push_back(p);
    }

    std::vector<Index> stride(d);
    stride[0] = 1;
    for (int i = 1; i < d; ++i) stride[i] = stride[i - 1] * side;

    std::size_t num_cubes = 1;
    for (int i = 0; i < d; ++i) num_cubes *= n;
    std::vector<int> perm(d);
    for (std::size_t cube = 0; cube < num_cubes; ++cube) {
        Index origin = 0;
        std::size_t r = cube;
        for (int i = 0; i < d; ++i) {
            origin += static_cast<Index>(r % n) * stride[i];
            r /= n;
        }
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Index v = origin;
            m.cells.push_back(v);
            for (int axis : perm) {
                v += stride[axis];
                m.cells.push_back(v);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return m;
}

bool on_box_boundary(const Vec& p, int n) {
    for (int i = 0; i < p.dim(); ++i) {
        if (p[i] == 0.0 || p[i] == static_cast<double>(n)) return true;
    }
    return false;
}

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementation.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Triangulation kuhn_grid(int dim, int cells_per_axis, double amplitude, std::uint64_t seed) {
    if (dim < 2 || dim > 5) throw std::invalid_argument("kuhn_grid: dimension must be in [2, 5]");
    if (cells_per_axis < 1) throw std::invalid_argument("kuhn_grid: need at least one cell per axis");
    if (!(amplitude >= 0.0 && amplitude <= 0.3)) {
        throw std::invalid_argument("kuhn_grid: perturbation amplitude must be in [0, 0.3]");
    }
    const MeshData lattice = kuhn_lattice(dim, cells_per_axis);
    Triangulation base = to_triangulation(lattice);
    if (amplitude == 0.0) return base;

    std::vector<double> min_edge(base.num_points(), std::numeric_limits<double>::infinity());
    for (const Edge& e : base.edges()) {
        const double len = norm(base.point(e.b) - base.point(e.a));
        min_edge[e.a] = std::min(min_edge[e.a], len);
        min_edge[e.b] = std::min(min_edge[e.b], len);
    }

    constexpr int kRetries = 5;
    double amp = amplitude;
    for (int attempt = 0;; ++attempt) {
        MeshData m = lattice;
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < m.points.size(); ++i) {
            if (on_box_boundary(lattice.points[i], cells_per_axis)) continue;
            for (int c = 0; c < dim; ++c) m.points[i][c] += (2.0 * unit_uniform(rng) - 1.0) * amp * min_edge[i];
        }
        try {
            return to_triangulation(std::move(m));
        } catch (const MeshError&) {
            if (attempt == kRetries) throw;
            amp *= 0.5;
        }
    }
}

Vec reflect_across(const Vec& p, std::span<const Vec> plane) {
    const int d = p.dim();
    if (static_cast<int>(plane.size()) != d) throw std::invalid_argument("reflect_across: need d plane points");
    std::array<Vec, kMaxDim> span_vecs;
    for (int i = 1; i < d; ++i) span_vecs[i - 1] = plane[i] - plane[0];
    const Vec n = generalized_cross(std::span<const Vec>(span_vecs.data(), d - 1));
    const double s = dot(p - plane[0], n) / dot(n, n);
    return p - (2.0 * s) * n;
}

Triangulation proof_cluster(std::span<const Vec, 5> base) {
    std::vector<Vec> pts(base.begin(), base.end());
    auto mirror = [&](int moved, std::array<int, 4> facet) {
        std::array<Vec, 4> plane{pts[facet[0]], pts[facet[1]], pts[facet[2]], pts[facet[3]]};
        return reflect_across(pts[moved], plane);
    };
    pts.push_back(mirror(4, {0, 1, 2, 3}));
    pts.push_back(mirror(3, {0, 1, 2, 4}));
    pts.push_back(mirror(2, {0, 1, 3, 4}));
    std::vector<Index> cells{0, 1, 2, 3, 4, 0, 1, 2, 3, 5, 0, 1, 2, 4, 6, 0, 1, 3, 4, 7};
    return Triangulation::build(4, std::move(pts), std::move(cells));
}

Triangulation canonical_mesh(std::string_view name) {
    auto standard = [](int d) {
        std::vector<Vec> pts{Vec(d)};
        for (int i = 0; i < d; ++i) pts.push_back(Vec::unit(d, i));
        std::vector<Index> cells(d + 1);
        std::iota(cells.begin(), cells.end(), 0);
        return Triangulation::build(d, std::move(pts), std::move(cells));
    };
    if (name == "standard-simplex-2") return standard(2);
    if (name == "standard-simplex-3") return standard(3);
    if (name == "standard-simplex-4") return standard(4);
    if (name == "standard-simplex-5") return standard(5);
    if (name == "mirrored-pair-4") {
        std::vector<Vec> pts{Vec(4), Vec::unit(4, 0), Vec::unit(4, 1), Vec::unit(4, 2), Vec::unit(4, 3),
                             -Vec::unit(4, 3)};
        return Triangulation::build(4, std::move(pts), {0, 1, 2, 3, 4, 0, 1, 2, 3, 5});
    }
    if (name == "proof-cluster-4") {
        const std::array<Vec, 5> base{Vec(4), Vec::unit(4, 0), Vec::unit(4, 1), Vec::unit(4, 2), Vec::unit(4, 3)};
        return proof_cluster(base);
    }
    throw std::invalid_argument("unknown canonical mesh \"" + std::string(name) + "\"");
}

}  // namespace mdual
