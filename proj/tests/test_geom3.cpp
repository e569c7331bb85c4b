#include "armik/geom3.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace armik;
using test::near;

TEST_CASE("cross products") {
    CHECK(cross({1, 0, 0}, {0, 1, 0}) == Vec3{0, 0, 1});
    CHECK(cross({-6, 6, 0}, {6, 6, -6}) == Vec3{-36, -36, -72});
    // Rounded fixture from the reference construction.
    const Vec3 c = cross({2.56, 0.44, -1.5}, {1.5, 1.5, -1.5});
    CHECK(near(c, {1.59, 1.59, 3.18}, 1e-12));
}

TEST_CASE("cross product is orthogonal and anti-commutative") {
    test::Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        const Vec3 u = rng.unit_vector() * rng.uniform(0.1, 10.0);
        const Vec3 v = rng.unit_vector() * rng.uniform(0.1, 10.0);
        const Vec3 c = cross(u, v);
        const double scale = norm(u) * norm(v);
        CHECK(std::abs(dot(c, u)) <= 1e-9 * scale);
        CHECK(std::abs(dot(c, v)) <= 1e-9 * scale);
        CHECK(near(c, -cross(v, u), 1e-15 * scale));
    }
}

TEST_CASE("norm") {
    CHECK(norm({0, 0, 0}) == 0.0);
    CHECK(near(norm({-6, 6, 0}), 8.49, 0.01));
    CHECK(near(norm({-36, -36, -72}), 88.18, 0.01));
}

TEST_CASE("normalize") {
    CHECK(near(normalize({-6, 6, 0}), {-0.71, 0.71, 0}, 0.01));
    CHECK(near(normalize({-36, -36, -72}), {-0.41, -0.41, -0.82}, 0.01));
    CHECK(normalize({0, 0, 5}) == Vec3{0, 0, 1});
    CHECK_THROWS_AS(normalize({0, 0, 0}), DegenerateInput);
    CHECK_THROWS_AS(normalize({1e-10, 0, 0}), DegenerateInput);

    test::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Vec3 v = rng.unit_vector() * rng.uniform(1e-8, 100.0);
        CHECK(std::abs(norm(normalize(v)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("plane through three points") {
    SUBCASE("reference construction") {
        const Plane p =
            plane_from_points({0, 0, 0}, {2.56, 0.44, -1.5}, {1.5, 1.5, -1.5});
        CHECK(near(p.normal, {1.59, 1.59, 3.18}, 1e-12));
        CHECK(p.offset == 0.0);
    }
    SUBCASE("XY plane") {
        const Plane p = plane_from_points({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
        CHECK(p.normal == Vec3{0, 0, 1});
        CHECK(p.offset == 0.0);
    }
    SUBCASE("offset plane") {
        const Plane p = plane_from_points({1, 1, 1}, {2, 1, 1}, {1, 2, 1});
        CHECK(p.normal == Vec3{0, 0, 1});
        CHECK(p.offset == 1.0);
    }
    SUBCASE("collinear points rejected") {
        CHECK_THROWS_AS(plane_from_points({0, 0, 0}, {1, 1, 1}, {2, 2, 2}),
                        DegenerateInput);
        CHECK_THROWS_AS(plane_from_points({1, 2, 3}, {1, 2, 3}, {4, 5, 6}),
                        DegenerateInput);
    }
    SUBCASE("every input point satisfies the equation") {
        test::Rng rng(13);
        for (int i = 0; i < 100; ++i) {
            const Vec3 a = rng.unit_vector() * rng.uniform(0.1, 5.0);
            const Vec3 b = rng.unit_vector() * rng.uniform(0.1, 5.0);
            const Vec3 c = rng.unit_vector() * rng.uniform(0.1, 5.0);
            Plane p;
            try {
                p = plane_from_points(a, b, c);
            } catch (const DegenerateInput&) {
                continue;
            }
            const double tol = 1e-9 * norm(p.normal);
            CHECK(std::abs(p.eval(a)) <= tol);
            CHECK(std::abs(p.eval(b)) <= tol);
            CHECK(std::abs(p.eval(c)) <= tol);
        }
    }
}

TEST_CASE("plane equivalence compares up to scale") {
    CHECK(plane_equivalent({{6, 6, -6}, 27}, {{2, 2, -2}, 9}));
    CHECK(plane_equivalent({{2, 2, -2}, 9}, {{-2, -2, 2}, -9}));
    CHECK_FALSE(plane_equivalent({{2, 2, -2}, 9}, {{2, 2, -2}, 8}));
}

TEST_CASE("line-plane angle") {
    const Plane reference{{1.59, 1.59, 3.18}, 0.0};
    CHECK(near(deg(line_plane_angle({{3, 3, -3}, {0, -1, 0}}, reference)), 24.11, 0.1));
    CHECK(near(line_plane_angle({{0, 0, 0}, {0, 0, 1}}, {{0, 0, 1}, 0}), kPi / 2, 1e-12));
    CHECK(near(line_plane_angle({{0, 0, 0}, {1, 0, 0}}, {{0, 0, 1}, 0}), 0.0, 1e-12));
    CHECK_THROWS_AS(line_plane_angle({{0, 0, 0}, {0, 0, 0}}, reference), DegenerateInput);
    CHECK_THROWS_AS(line_plane_angle({{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, 0}),
                    DegenerateInput);

    SUBCASE("invariant under rescaling direction and normal") {
        test::Rng rng(99);
        for (int i = 0; i < 100; ++i) {
            const Line3 line{rng.unit_vector(), rng.unit_vector() * rng.uniform(0.1, 4.0)};
            const Plane plane{rng.unit_vector() * rng.uniform(0.1, 4.0), rng.uniform(-2, 2)};
            const double a = line_plane_angle(line, plane);
            const double s1 = rng.uniform(0.1, 10.0);
            const double s2 = -rng.uniform(0.1, 10.0);
            CHECK(near(line_plane_angle({line.origin, line.direction * s1},
                                        {plane.normal * s2, plane.offset * s2}),
                       a, 1e-9));
        }
    }
}

TEST_CASE("vector angle") {
    CHECK(near(deg(vector_angle({-0.44, -2.56, 1.5}, {0, 1, 0})), 148.40, 0.3));
    CHECK(vector_angle({1, 0, 0}, {1, 0, 0}) == 0.0);
    CHECK(near(vector_angle({1, 0, 0}, {0, 1, 0}), kPi / 2, 1e-12));
    CHECK_THROWS_AS(vector_angle({0, 0, 0}, {1, 0, 0}), DegenerateInput);

    SUBCASE("absolute variant folds into [0, pi/2]") {
        CHECK(near(vector_angle_absolute({-0.44, -2.56, 1.5}, {0, 1, 0}),
                   kPi - vector_angle({-0.44, -2.56, 1.5}, {0, 1, 0}), 1e-12));
        CHECK(near(vector_angle_absolute({1, 0, 0}, {1, 1, 0}), kPi / 4, 1e-12));
    }

    SUBCASE("positive scaling invariance; negative flips to the complement") {
        test::Rng rng(5);
        for (int i = 0; i < 100; ++i) {
            const Vec3 u = rng.unit_vector() * rng.uniform(0.1, 5.0);
            const Vec3 v = rng.unit_vector() * rng.uniform(0.1, 5.0);
            const double theta = vector_angle(u, v);
            const double c = rng.uniform(0.1, 10.0);
            CHECK(near(vector_angle(u * c, v), theta, 1e-9));
            CHECK(near(vector_angle(u * -c, v), kPi - theta, 1e-9));
        }
    }
}
