#include "mdual/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace mdual {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double determinant(std::span<const double> m, int n) {
    if (n < 0 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != m.size()) {
        throw std::invalid_argument("determinant: matrix size mismatch");
    }
    switch (n) {
        case 0:
            return 1.0;
        case 1:
            return m[0];
        case 2:
            return m[0] * m[3] - m[1] * m[2];
        case 3:
            return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                   m[2] * (m[3] * m[7] - m[4] * m[6]);
        default:
            break;
    }
    std::array<double, kMaxDim * kMaxDim> a{};
    std::copy(m.begin(), m.end(), a.begin());
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        }
        if (a[piv * n + col] == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
            det = -det;
        }
        const double p = a[col * n + col];
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / p;
            for (int c = col + 1; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
        }
    }
    return det;
}

Vec generalized_cross(std::span<const Vec> vectors) {
    const int d = static_cast<int>(vectors.size()) + 1;
    if (d < 2 || d > kMaxDim) {
        throw std::invalid_argument("generalized_cross: need between 1 and " +
                                    std::to_string(kMaxDim - 1) + " vectors");
    }
    for (const Vec& v : vectors) {
        if (v.dim() != d) {
            throw std::invalid_argument("generalized_cross: " + std::to_string(d - 1) +
                                        " vectors must live in R^" + std::to_string(d));
        }
    }
    const int m = d - 1;
    Vec out(d);
    std::array<double, kMaxDim * kMaxDim> minor{};
    for (int i = 0; i < d; ++i) {
        // Drop column i; rows are the input vectors.
        for (int r = 0; r < m; ++r) {
            int c_out = 0;
            for (int c = 0; c < d; ++c) {
                if (c == i) continue;
                minor[r * m + c_out++] = vectors[r][c];
            }
        }
        const double cof = determinant(std::span<const double>(minor.data(), m * m), m);
        out[i] = (i % 2 == 0) ? cof : -cof;
    }
    return out;
}

double simplex_signed_det(std::span<const Vec> vertices) {
    const int d = static_cast<int>(vertices.size()) - 1;
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("simplex_signed_det: bad vertex count");
    std::array<double, kMaxDim * kMaxDim> m{};
    for (int r = 0; r < d; ++r) {
        if (vertices[r + 1].dim() != d) {
            throw std::invalid_argument("simplex_signed_det: vertex dimension mismatch");
        }
        for (int c = 0; c < d; ++c) m[r * d + c] = vertices[r + 1][c] - vertices[0][c];
    }
    return determinant(std::span<const double>(m.data(), d * d), d);
}

double simplex_hypervolume(std::span<const Vec> vertices) {
    const int d = static_cast<int>(vertices.size()) - 1;
    return std::abs(simplex_signed_det(vertices)) / factorial(d);
}

double max_edge_length(std::span<const Vec> vertices) {
    double h = 0.0;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            h = std::max(h, norm(vertices[b] - vertices[a]));
        }
    }
    return h;
}

bool is_degenerate(std::span<const Vec> vertices) {
    const int d = static_cast<int>(vertices.size()) - 1;
    const double h = max_edge_length(vertices);
    return simplex_hypervolume(vertices) < kDegenerateRel * std::pow(h, d);
}

double facet_hyperarea(std::span<const Vec> vertices) {
    const int d = static_cast<int>(vertices.size());
    std::array<Vec, kMaxDim> span_vecs;
    for (int i = 1; i < d; ++i) span_vecs[i - 1] = vertices[i] - vertices[0];
    return norm(generalized_cross(std::span<const Vec>(span_vecs.data(), d - 1))) / factorial(d - 1);
}

FacetNormal opposite_facet_normal(std::span<const Vec> vertices, int j) {
    const int d = static_cast<int>(vertices.size()) - 1;
    if (j < 0 || j > d) throw std::invalid_argument("opposite_facet_normal: local index out of range");
    if (is_degenerate(vertices)) return {Vec(d), true};

    std::array<int, kMaxDim> facet{};
    int nf = 0;
    for (int i = 0; i <= d; ++i) {
        if (i != j) facet[nf++] = i;
    }
    std::array<Vec, kMaxDim> span_vecs;
    for (int i = 1; i < d; ++i) span_vecs[i - 1] = vertices[facet[i]] - vertices[facet[0]];
    Vec n = generalized_cross(std::span<const Vec>(span_vecs.data(), d - 1)) * (1.0 / factorial(d - 1));
    if (dot(vertices[facet[0]] - vertices[j], n) < 0.0) n *= -1.0;
    return {n, false};
}

double altitude(std::span<const Vec> vertices, int j, int k) {
    const int d = static_cast<int>(vertices.size()) - 1;
    if (j == k || k < 0 || k > d) throw std::invalid_argument("altitude: need two distinct local vertices");
    FacetNormal fn = opposite_facet_normal(vertices, j);
    if (fn.degenerate) throw std::domain_error("altitude: degenerate simplex");
    return dot(vertices[k] - vertices[j], fn.n) / norm(fn.n);
}

Vec centroid(std::span<const Vec> points) {
    if (points.empty()) throw std::invalid_argument("centroid: empty point set");
    Vec c(points[0].dim());
    for (const Vec& p : points) {
        if (p.dim() != c.dim()) throw std::invalid_argument("centroid: mixed dimensions");
        c += p;
    }
    return c * (1.0 / static_cast<double>(points.size()));
}

}  // namespace mdual
