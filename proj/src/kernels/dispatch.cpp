#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mdual/kernels/facet_normals.hpp"

namespace mdual::kernels {

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Auto:
            return "auto";
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
    }
    return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
    if (name == "auto") return Backend::Auto;
    if (name == "scalar") return Backend::Scalar;
    if (name == "avx2") return Backend::Avx2;
    return std::nullopt;
}

bool avx2_available() {
#if defined(MDUAL_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

Backend resolve(Backend requested) {
    if (requested == Backend::Auto) {
        if (const char* env = std::getenv("MDUAL_KERNEL")) {
            if (auto b = parse_backend(env); b && *b != Backend::Auto) requested = *b;
        }
    }
    if (requested == Backend::Auto) return avx2_available() ? Backend::Avx2 : Backend::Scalar;
    if (requested == Backend::Avx2 && !avx2_available()) return Backend::Scalar;
    return requested;
}

void opposite_facet_normals(int dim, std::span<const Vec> points, std::span<const Index> cells,
                            std::span<double> out, Backend backend) {
    const std::size_t nv = static_cast<std::size_t>(dim) + 1;
    if (dim < 2 || dim > kMaxMeshDim || cells.size() % nv != 0) {
        throw std::invalid_argument("opposite_facet_normals: bad dimension or cell array");
    }
    if (out.size() != cells.size() * static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("opposite_facet_normals: output size mismatch");
    }
    switch (resolve(backend)) {
#if defined(MDUAL_HAVE_AVX2)
        case Backend::Avx2:
            detail::opposite_facet_normals_avx2(dim, points, cells, out);
            return;
#endif
        default:
            detail::opposite_facet_normals_scalar(dim, points, cells, out);
            return;
    }
}

}  // namespace mdual::kernels
