#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "mdual/io.hpp"
#include "mdual/mesh.hpp"

namespace mdual {

/// [0, n]^d lattice with every unit cube split into d! Kuhn simplices (one per
/// axis permutation). Point (x_0, ..., x_{d-1}) has index sum x_i (n+1)^i.
/// Interior points are then displaced uniformly in a box of half-width
/// amplitude * (shortest incident edge), seeded by `seed`; if the result fails
/// validation the amplitude is halved, up to five times.
///
/// Requires d in [2, 5], n >= 1, amplitude in [0, 0.3]; throws
/// std::invalid_argument otherwise and MeshError if every retry fails.
Triangulation kuhn_grid(int dim, int cells_per_axis, double amplitude = 0.0, std::uint64_t seed = 0);

inline constexpr std::array<std::string_view, 6> kCanonicalMeshNames{
    "standard-simplex-2", "standard-simplex-3", "standard-simplex-4",
    "standard-simplex-5", "mirrored-pair-4",    "proof-cluster-4",
};

/// Named reference meshes. Throws std::invalid_argument on an unknown name.
Triangulation canonical_mesh(std::string_view name);

/// Four pentatopes sharing edge (0, 1): the base cell {0..4} and its neighbours
/// {0,1,2,3,5}, {0,1,2,4,6}, {0,1,3,4,7}, where 5, 6, 7 mirror points 4, 3, 2
/// across the shared facets.
Triangulation proof_cluster(std::span<const Vec, 5> base);

/// Mirror image of p across the hyperplane through the d points of `plane`.
Vec reflect_across(const Vec& p, std::span<const Vec> plane);

}  // namespace mdual
