// Compiled with -mavx2 only (no FMA) so every lane rounds exactly like the
// scalar reference.
#include <immintrin.h>


#include "mdual/kernels/facet_normals.hpp"

namespace mdual::kernels::detail {

namespace {

constexpr int kLanes = 4;

inline __m256d sub(__m256d a, __m256d b) { return _mm256_sub_pd(a, b); }
inline __m256d mul(__m256d a, __m256d b) { return _mm256_mul_pd(a, b); }
inline __m256d add(__m256d a, __m256d b) { return _mm256_add_pd(a, b); }
inline __m256d neg(__m256d a) { return _mm256_xor_pd(a, _mm256_set1_pd(-0.0)); }

// Same association order as determinant(n = 2) in geometry.cpp.
inline __m256d det2(__m256d a0, __m256d a1, __m256d b0, __m256d b1) { return sub(mul(a0, b1), mul(a1, b0)); }

// Same association order as determinant(n = 3) in geometry.cpp.
inline __m256d det3(const __m256d a[3], const __m256d b[3], const __m256d c[3]) {
    const __m256d t0 = mul(a[0], sub(mul(b[1], c[2]), mul(b[2], c[1])));
    const __m256d t1 = mul(a[1], sub(mul(b[0], c[2]), mul(b[2], c[0])));
    const __m256d t2 = mul(a[2], sub(mul(b[0], c[1]), mul(b[1], c[0])));
    return add(sub(t0, t1), t2);
}

template <int D>
struct Lanes {
    __m256d p[D + 1][D];  // p[vertex][coord], lane = cell
};

template <int D>
struct Pack {
    __m256d v[D];
};

template <int D>
Lanes<D> gather(std::span<const Vec> points, const Index* verts) {
    constexpr int nv = D + 1;
    Lanes<D> l;
    for (int v = 0; v < nv; ++v) {
        const Vec& a = points[verts[0 * nv + v]];
        const Vec& b = points[verts[1 * nv + v]];
        const Vec& c = points[verts[2 * nv + v]];
        const Vec& d = points[verts[3 * nv + v]];
        for (int i = 0; i < D; ++i) l.p[v][i] = _mm256_set_pd(d[i], c[i], b[i], a[i]);
    }
    return l;
}

template <int D>
void orient_and_store(const Lanes<D>& l, int j, int first, Pack<D> n, double* out,
                      std::size_t c0) {
    constexpr int nv = D + 1;
    __m256d proj = _mm256_setzero_pd();
    for (int i = 0; i < D; ++i) proj = add(proj, mul(sub(l.p[first][i], l.p[j][i]), n.v[i]));
    const __m256d flip = _mm256_cmp_pd(proj, _mm256_setzero_pd(), _CMP_LT_OQ);
    alignas(32) double buf[D][kLanes];
    for (int i = 0; i < D; ++i) {
        n.v[i] = _mm256_blendv_pd(n.v[i], neg(n.v[i]), flip);
        _mm256_store_pd(buf[i], n.v[i]);
    }
    for (int lane = 0; lane < kLanes; ++lane) {
        double* dst = out + ((c0 + lane) * nv + j) * D;
        for (int i = 0; i < D; ++i) dst[i] = buf[i][lane];
    }
}

void normals3(const Lanes<3>& l, double* out, std::size_t c0) {
    const __m256d half = _mm256_set1_pd(1.0 / 2.0);
    for (int j = 0; j < 4; ++j) {
        int f[3];
        int nf = 0;
        for (int i = 0; i < 4; ++i) {
            if (i != j) f[nf++] = i;
        }
        __m256d u[3], v[3];
        for (int i = 0; i < 3; ++i) {
            u[i] = sub(l.p[f[1]][i], l.p[f[0]][i]);
            v[i] = sub(l.p[f[2]][i], l.p[f[0]][i]);
        }
        Pack<3> n{{
            mul(det2(u[1], u[2], v[1], v[2]), half),
            mul(neg(det2(u[0], u[2], v[0], v[2])), half),
            mul(det2(u[0], u[1], v[0], v[1]), half),
        }};
        orient_and_store<3>(l, j, f[0], n, out, c0);
    }
}

void normals4(const Lanes<4>& l, double* out, std::size_t c0) {
    const __m256d sixth = _mm256_set1_pd(1.0 / 6.0);
    for (int j = 0; j < 5; ++j) {
        int f[4];
        int nf = 0;
        for (int i = 0; i < 5; ++i) {
            if (i != j) f[nf++] = i;
        }
        __m256d u[4], v[4], w[4];
        for (int i = 0; i < 4; ++i) {
            u[i] = sub(l.p[f[1]][i], l.p[f[0]][i]);
            v[i] = sub(l.p[f[2]][i], l.p[f[0]][i]);
            w[i] = sub(l.p[f[3]][i], l.p[f[0]][i]);
        }
        // Minor rows with column `skip` removed.
        auto minor = [&](int skip) {
            __m256d a[3], b[3], c[3];
            int k = 0;
            for (int i = 0; i < 4; ++i) {
                if (i == skip) continue;
                a[k] = u[i];
                b[k] = v[i];
                c[k] = w[i];
                ++k;
            }
            return det3(a, b, c);
        };
        Pack<4> n{{
            mul(minor(0), sixth),
            mul(neg(minor(1)), sixth),
            mul(minor(2), sixth),
            mul(neg(minor(3)), sixth),
        }};
        orient_and_store<4>(l, j, f[0], n, out, c0);
    }
}

}  // namespace

void opposite_facet_normals_avx2(int dim, std::span<const Vec> points, std::span<const Index> cells,
                                 std::span<double> out) {
    if (dim != 3 && dim != 4) {
        opposite_facet_normals_scalar(dim, points, cells, out);
        return;
    }
    const std::size_t nv = static_cast<std::size_t>(dim) + 1;
    const std::size_t num_cells = cells.size() / nv;
    const std::size_t body = num_cells - num_cells % kLanes;
    for (std::size_t c0 = 0; c0 < body; c0 += kLanes) {
        const Index* verts = cells.data() + c0 * nv;
        if (dim == 3) {
            normals3(gather<3>(points, verts), out.data(), c0);
        } else {
            normals4(gather<4>(points, verts), out.data(), c0);
        }
    }
    if (body < num_cells) {
        opposite_facet_normals_scalar(dim, points, cells.subspan(body * nv),
                                      out.subspan(body * nv * dim));
    }
}

}  // namespace mdual::kernels::detail
