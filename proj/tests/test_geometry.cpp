#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mdual/geometry.hpp"
#include "support.hpp"

using namespace mdual;
using mdual::testing::near;

namespace {

std::vector<Vec> standard_simplex(int d) {
    std::vector<Vec> v{Vec(d)};
    for (int i = 0; i < d; ++i) v.push_back(Vec::unit(d, i));
    return v;
}

}  // namespace

TEST_CASE("generalized_cross: coordinate and classical cases") {
    const std::vector<Vec> e234{Vec::unit(4, 1), Vec::unit(4, 2), Vec::unit(4, 3)};
    CHECK(generalized_cross(e234) == Vec{1, 0, 0, 0});

    const std::vector<Vec> e12{Vec::unit(3, 0), Vec::unit(3, 1)};
    CHECK(generalized_cross(e12) == Vec{0, 0, 1});

    const std::vector<Vec> one{Vec{3, 4}};
    const Vec perp = generalized_cross(one);
    CHECK(dot(perp, Vec{3, 4}) == 0.0);
    CHECK(norm(perp) == doctest::Approx(5.0));
}

TEST_CASE("generalized_cross: hand-expanded 4D case") {
    const std::vector<Vec> in{{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}};
    const Vec n = generalized_cross(in);
    CHECK(n == Vec{1, 1, 1, 1});
    for (const Vec& v : in) CHECK(dot(n, v) == 0.0);
    CHECK(near(n, mdual::testing::leibniz_cross(in), 1e-15));
}

TEST_CASE("generalized_cross: dimension mismatch is rejected") {
    const std::vector<Vec> bad{Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}};
    CHECK_THROWS_AS(generalized_cross(bad), std::invalid_argument);
    const std::vector<Vec> mixed{Vec{1, 0, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1, 0}};
    CHECK_THROWS_AS(generalized_cross(mixed), std::invalid_argument);
}

TEST_CASE("generalized_cross: orthogonal, alternating, magnitude = parallelotope volume (random)") {
    std::mt19937_64 rng(7);
    for (int d = 2; d <= 6; ++d) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Vec> in;
            for (int i = 0; i < d - 1; ++i) in.push_back(mdual::testing::random_vec(rng, d));
            const Vec n = generalized_cross(in);
            double mag = 1.0;
            for (const Vec& v : in) {
                mag = std::max(mag, norm(v));
                CHECK(std::abs(dot(n, v)) <= 1e-12 * norm(n) * norm(v));
            }
            CHECK(near(n, mdual::testing::leibniz_cross(in), 1e-12 * mag));

            // Gram determinant gives the squared parallelotope volume.
            std::vector<std::vector<double>> gram(d - 1, std::vector<double>(d - 1));
            for (int a = 0; a < d - 1; ++a)
                for (int b = 0; b < d - 1; ++b) gram[a][b] = dot(in[a], in[b]);
            CHECK(dot(n, n) == doctest::Approx(mdual::testing::leibniz_det(gram)).epsilon(1e-10));

            if (d >= 3) {
                std::vector<Vec> swapped = in;
                std::swap(swapped[0], swapped[1]);
                CHECK(near(generalized_cross(swapped), -n, 1e-14 * norm(n) + 1e-300));
            }
        }
    }
}

TEST_CASE("generalized_cross: multilinear in each argument") {
    std::mt19937_64 rng(11);
    for (int d = 3; d <= 5; ++d) {
        std::vector<Vec> in;
        for (int i = 0; i < d - 1; ++i) in.push_back(mdual::testing::random_vec(rng, d));
        const Vec extra = mdual::testing::random_vec(rng, d);
        std::vector<Vec> sum = in;
        sum[1] = in[1] * 2.5 + extra;
        std::vector<Vec> only_extra = in;
        only_extra[1] = extra;
        CHECK(near(generalized_cross(sum), generalized_cross(in) * 2.5 + generalized_cross(only_extra), 1e-12));
    }
}

TEST_CASE("simplex_hypervolume") {
    CHECK(simplex_hypervolume(standard_simplex(2)) == doctest::Approx(0.5));
    CHECK(simplex_hypervolume(standard_simplex(4)) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));

    std::vector<Vec> twin = standard_simplex(3);
    twin[2] = twin[1];
    CHECK(simplex_hypervolume(twin) == 0.0);
    CHECK(is_degenerate(twin));
    CHECK_FALSE(is_degenerate(standard_simplex(3)));
}

TEST_CASE("determinant: elimination path agrees with Leibniz") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int n = 1; n <= 6; ++n) {
        std::vector<double> flat(n * n);
        std::vector<std::vector<double>> rows(n, std::vector<double>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) rows[r][c] = flat[r * n + c] = u(rng);
        CHECK(determinant(flat, n) == doctest::Approx(mdual::testing::leibniz_det(rows)).epsilon(1e-12));
    }
}

TEST_CASE("opposite_facet_normal: standard pentatope and unit right triangle") {
    const auto s4 = standard_simplex(4);
    const FacetNormal n0 = opposite_facet_normal(s4, 0);
    CHECK_FALSE(n0.degenerate);
    const double sixth = 1.0 / 6.0;
    CHECK(near(n0.n, Vec{sixth, sixth, sixth, sixth}, 1e-16));
    CHECK(norm(n0.n) == doctest::Approx(1.0 / 3.0));

    const auto s2 = standard_simplex(2);
    CHECK(near(opposite_facet_normal(s2, 0).n, Vec{1, 1}, 1e-16));
    // Facet opposite e1 lies on the x2 axis; outward is -x1.
    CHECK(near(opposite_facet_normal(s2, 1).n, Vec{-1, 0}, 1e-16));
}

TEST_CASE("opposite_facet_normal: degenerate simplex is flagged") {
    std::vector<Vec> flat{Vec{0, 0}, Vec{1, 0}, Vec{2, 0}};
    const FacetNormal fn = opposite_facet_normal(flat, 0);
    CHECK(fn.degenerate);
    CHECK(fn.n == Vec(2));
    CHECK_THROWS_AS(altitude(flat, 0, 1), std::domain_error);
}

TEST_CASE("opposite_facet_normal: matches barycentric-gradient oracle; orientation; Minkowski closure") {
    std::mt19937_64 rng(2024);
    for (int d = 2; d <= 5; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto s = mdual::testing::random_simplex(rng, d);
            Vec sum(d);
            double area = 0.0;
            for (int j = 0; j <= d; ++j) {
                const Vec n = opposite_facet_normal(s, j).n;
                CHECK(near(n, mdual::testing::barycentric_facet_normal(s, j), 1e-12 * norm(n)));
                for (int k = 0; k <= d; ++k) {
                    if (k != j) CHECK(dot(s[k] - s[j], n) > 0.0);
                }
                sum += n;
                area += norm(n);
            }
            CHECK(norm(sum) <= 1e-12 * area);
        }
    }
}

TEST_CASE("altitude: hand values and volume relation") {
    const auto s4 = standard_simplex(4);
    for (int k = 1; k <= 4; ++k) CHECK(altitude(s4, 0, k) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(altitude(standard_simplex(2), 0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)));

    std::mt19937_64 rng(99);
    for (int d = 2; d <= 5; ++d) {
        const auto s = mdual::testing::random_simplex(rng, d);
        const double vol = simplex_hypervolume(s);
        for (int j = 0; j <= d; ++j) {
            const double area = norm(opposite_facet_normal(s, j).n);
            const double h0 = altitude(s, j, j == 0 ? 1 : 0);
            for (int k = 0; k <= d; ++k) {
                if (k == j) continue;
                const double h = altitude(s, j, k);
                CHECK(mdual::testing::rel_diff(h, h0) <= 1e-12);
                CHECK(mdual::testing::rel_diff(h * area / d, vol) <= 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(altitude(s4, 2, 2), std::invalid_argument);
}

TEST_CASE("centroid") {
    const std::vector<Vec> edge{Vec(4), Vec::unit(4, 0)};
    CHECK(centroid(edge) == Vec{0.5, 0, 0, 0});
    const auto s4 = standard_simplex(4);
    CHECK(near(centroid(s4), Vec{0.2, 0.2, 0.2, 0.2}, 1e-16));
    const std::vector<Vec> single{Vec{3, -1}};
    CHECK(centroid(single) == Vec{3, -1});
    CHECK_THROWS_AS(centroid(std::vector<Vec>{}), std::invalid_argument);
}
