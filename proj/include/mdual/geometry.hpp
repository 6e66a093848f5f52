#pragma once

#include <span>

#include "mdual/vec.hpp"

// Dimension-generic simplex primitives. Everything here is a pure function of
// its arguments.
namespace mdual {

/// Relative degeneracy tolerance: |T| < kDegenerateRel * (max edge length)^d.
inline constexpr double kDegenerateRel = 1e-14;

/// Determinant of an n x n row-major matrix. Closed forms up to n = 3,
/// partial-pivot elimination beyond.
double determinant(std::span<const double> m, int n);

/// Cofactor expansion of the d x d determinant whose first row holds the unit
/// vectors and whose remaining rows are `vectors` (d-1 of them, each in R^d).
/// The result is orthogonal to every input and its length is the volume of the
/// parallelotope they span. Throws std::invalid_argument on a size mismatch.
Vec generalized_cross(std::span<const Vec> vectors);

/// Signed det[p1-p0, ..., pd-p0]; `vertices` must hold d+1 points in R^d.
double simplex_signed_det(std::span<const Vec> vertices);

/// Unsigned d-volume of a d-simplex in R^d. Degenerate input yields 0.
double simplex_hypervolume(std::span<const Vec> vertices);

double max_edge_length(std::span<const Vec> vertices);

/// True when the hypervolume falls below the scale-invariant threshold.
bool is_degenerate(std::span<const Vec> vertices);

/// (d-1)-volume of a (d-1)-simplex embedded in R^d (d vertices).
double facet_hyperarea(std::span<const Vec> vertices);

struct FacetNormal {
    Vec n;
    bool degenerate = false;
};

/// Normal of the facet opposite local vertex `j`, with length equal to the
/// facet's (d-1)-volume and pointing away from vertex j. A degenerate simplex
/// gives a zero vector with the flag set.
FacetNormal opposite_facet_normal(std::span<const Vec> vertices, int j);

/// Distance from vertex j to the hyperplane of its opposite facet, measured
/// along the edge towards vertex k. Throws std::domain_error on degenerate input.
double altitude(std::span<const Vec> vertices, int j, int k);

/// Arithmetic mean. Throws std::invalid_argument on empty input.
Vec centroid(std::span<const Vec> points);

double factorial(int n);

}  // namespace mdual
