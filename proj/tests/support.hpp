#pragma once

// Test-only helpers: random inputs and oracles that do not go through the
// library's determinant / cross-product code.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "mdual/vec.hpp"

namespace mdual::testing {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline bool near(const Vec& a, const Vec& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return norm(a - b) <= tol;
}

/// Leibniz-formula determinant (sum over permutations).
inline double leibniz_det(const std::vector<std::vector<double>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    double total = 0.0;
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (p[a] > p[b]) ++inv;
        double term = (inv % 2 == 0) ? 1.0 : -1.0;
        for (int r = 0; r < n; ++r) term *= m[r][p[r]];
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Generalized cross product via full Leibniz determinants with e_i as first row.
inline Vec leibniz_cross(const std::vector<Vec>& rows) {
    const int d = static_cast<int>(rows.size()) + 1;
    Vec out(d);
    for (int i = 0; i < d; ++i) {
        std::vector<std::vector<double>> m(d, std::vector<double>(d, 0.0));
        m[0][i] = 1.0;
        for (int r = 1; r < d; ++r)
            for (int c = 0; c < d; ++c) m[r][c] = rows[r - 1][c];
        out[i] = leibniz_det(m);
    }
    return out;
}

/// Outward normal of the facet opposite vertex j scaled by its (d-1)-volume,
/// from the barycentric gradient: n_j = -d |T| grad(lambda_j), with
/// grad(lambda_j) by Cramer's rule on Leibniz determinants.
inline Vec barycentric_facet_normal(const std::vector<Vec>& verts, int j) {
    const int d = static_cast<int>(verts.size()) - 1;
    // Affine matrix A (rows = [1, p_i]); lambda = A^{-T} [1, x].
    std::vector<std::vector<double>> a(d + 1, std::vector<double>(d + 1));
    for (int r = 0; r <= d; ++r) {
        a[r][0] = 1.0;
        for (int c = 0; c < d; ++c) a[r][c + 1] = verts[r][c];
    }
    const double det = leibniz_det(a);
    double fact = 1.0;
    for (int i = 2; i <= d; ++i) fact *= i;
    const double vol = std::abs(det) / fact;
    // grad lambda_j component c = cofactor(j, c+1) / det.
    Vec g(d);
    for (int c = 0; c < d; ++c) {
        std::vector<std::vector<double>> minor;
        for (int r = 0; r <= d; ++r) {
            if (r == j) continue;
            std::vector<double> row;
            for (int k = 0; k <= d; ++k)
                if (k != c + 1) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        const double sign = ((j + c + 1) % 2 == 0) ? 1.0 : -1.0;
        g[c] = sign * leibniz_det(minor) / det;
    }
    return g * (-d * vol);
}

inline Vec random_vec(std::mt19937_64& rng, int d, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = u(rng);
    return v;
}

/// Random well-shaped simplex: unit simplex under a near-identity affine map.
inline std::vector<Vec> random_simplex(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    std::vector<Vec> v;
    const Vec shift = random_vec(rng, d, -5.0, 5.0);
    for (int i = 0; i <= d; ++i) {
        Vec p(d);
        if (i > 0) p[i - 1] = 1.0;
        Vec q(d);
        for (int r = 0; r < d; ++r) {
            q[r] = p[r];
            for (int c = 0; c < d; ++c) q[r] += u(rng) * p[c];
        }
        v.push_back(q + shift);
    }
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

}  // namespace mdual::testing
