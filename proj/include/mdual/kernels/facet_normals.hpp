#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "mdual/mesh.hpp"
#include "mdual/vec.hpp"

// Batched per-cell opposite-facet normals: the arithmetic hot loop of the
// algebraic dual. A scalar reference and an AVX2 variant (d = 3, 4) share one
// contract and are selected at runtime.
namespace mdual::kernels {

enum class Backend { Auto, Scalar, Avx2 };

std::string_view backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

/// AVX2 variant compiled in and the running CPU supports it.
bool avx2_available();

/// Resolves Auto: the MDUAL_KERNEL environment variable ("scalar" or "avx2")
/// wins if set, otherwise the widest available variant. Requesting Avx2 on a
/// machine without it falls back to Scalar.
Backend resolve(Backend requested);

/// For every cell c and local vertex j, writes the normal of the facet
/// opposite j (length = facet (d-1)-volume, pointing away from j) to
/// out[((c * (d+1)) + j) * d + i]. `cells` is the flat (d+1)-per-cell index
/// array; `out` must hold cells.size() * d doubles.
void opposite_facet_normals(int dim, std::span<const Vec> points, std::span<const Index> cells,
                            std::span<double> out, Backend backend = Backend::Auto);

namespace detail {
void opposite_facet_normals_scalar(int dim, std::span<const Vec> points, std::span<const Index> cells,
                                   std::span<double> out);
#if defined(MDUAL_HAVE_AVX2)
void opposite_facet_normals_avx2(int dim, std::span<const Vec> points, std::span<const Index> cells,
                                 std::span<double> out);
#endif
}  // namespace detail

}  // namespace mdual::kernels
