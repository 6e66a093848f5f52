#include <array>

#include "mdual/geometry.hpp"
#include "mdual/kernels/facet_normals.hpp"

namespace mdual::kernels::detail {

void opposite_facet_normals_scalar(int dim, std::span<const Vec> points, std::span<const Index> cells,
                                   std::span<double> out) {
    const int nv = dim + 1;
    const std::size_t num_cells = cells.size() / nv;
    const double scale = 1.0 / factorial(dim - 1);
    std::array<Vec, kMaxDim> span_vecs;
    for (std::size_t c = 0; c < num_cells; ++c) {
        const Index* verts = cells.data() + c * nv;
        for (int j = 0; j < nv; ++j) {
            // Facet vertices in ascending local order, skipping j.
            const int first = (j == 0) ? 1 : 0;
            const Vec& base = points[verts[first]];
            int s = 0;
            for (int i = first + 1; i < nv; ++i) {
                if (i == j) continue;
                span_vecs[s++] = points[verts[i]] - base;
            }
            Vec n = generalized_cross(std::span<const Vec>(span_vecs.data(), dim - 1)) * scale;
            const Vec to_facet = base - points[verts[j]];
            double proj = 0.0;
            for (int i = 0; i < dim; ++i) proj += to_facet[i] * n[i];
            if (proj < 0.0) n *= -1.0;
            double* dst = out.data() + (c * nv + j) * dim;
            for (int i = 0; i < dim; ++i) dst[i] = n[i];
        }
    }
}

}  // namespace mdual::kernels::detail
