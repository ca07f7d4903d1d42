#include <doctest.h>

#include "rissim/geometry.hpp"

using namespace rissim;

TEST_CASE("single element sits at the origin") {
    ArrayGeometry g(1, 1, 0.0046, 26e9);
    auto pos = element_positions(g);
    REQUIRE(pos.size() == 1);
    CHECK(pos[0].x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(pos[0].y == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(pos[0].z == 0.0);
}

TEST_CASE("2x2 grid is symmetric about the origin in row-major order") {
    ArrayGeometry g(2, 2, 0.0046, 26e9);
    auto pos = element_positions(g);
    REQUIRE(pos.size() == 4);
    double h = 0.0023;
    CHECK(pos[0].x == doctest::Approx(-h));
    CHECK(pos[0].y == doctest::Approx(h));
    CHECK(pos[1].x == doctest::Approx(h));
    CHECK(pos[1].y == doctest::Approx(h));
    CHECK(pos[2].x == doctest::Approx(-h));
    CHECK(pos[2].y == doctest::Approx(-h));
    CHECK(pos[3].x == doctest::Approx(h));
    CHECK(pos[3].y == doctest::Approx(-h));
}

TEST_CASE("20x20 aperture spans 8 wavelengths at 26 GHz") {
    ArrayGeometry g(20, 20, 0.0046, 26e9);
    auto pos = element_positions(g);
    REQUIRE(pos.size() == 400);
    double min_x = 1e9, max_x = -1e9;
    for (const auto& p : pos) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
    }
    CHECK(max_x - min_x == doctest::Approx(0.0874).epsilon(1e-12)); // center-to-center span
    double aperture_side = g.n_cols * g.pitch;
    CHECK(aperture_side / g.wavelength() == doctest::Approx(8.0).epsilon(0.01));
}

TEST_CASE("centroid is at the origin") {
    for (auto [nr, nc] : {std::pair{3, 5}, {4, 4}, {7, 2}}) {
        ArrayGeometry g(nr, nc, 0.0046, 26e9);
        Vec3 sum{};
        for (const auto& p : element_positions(g))
            sum = sum + p;
        CHECK(std::abs(sum.x) < 1e-12);
        CHECK(std::abs(sum.y) < 1e-12);
    }
}

TEST_CASE("grid has point symmetry about the origin") {
    ArrayGeometry g(5, 8, 0.003, 26e9);
    auto pos = element_positions(g);
    for (int i = 0; i < g.n_rows; ++i)
        for (int j = 0; j < g.n_cols; ++j) {
            const Vec3& a = pos[static_cast<std::size_t>(i * g.n_cols + j)];
            const Vec3& b = pos[static_cast<std::size_t>((g.n_rows - 1 - i) * g.n_cols +
                                                         (g.n_cols - 1 - j))];
            CHECK(a.x == doctest::Approx(-b.x).epsilon(1e-15));
            CHECK(a.y == doctest::Approx(-b.y).epsilon(1e-15));
        }
}

TEST_CASE("wavenumber and wavelength are consistent") {
    ArrayGeometry g(1, 1, 0.0046, 26e9);
    CHECK(g.wavenumber() * g.wavelength() == doctest::Approx(2.0 * kPi).epsilon(1e-12));
}

TEST_CASE("far-field distance reproduces the 2.9 m aperture figure") {
    ArrayGeometry g(20, 20, 0.0046, 26e9);
    CHECK(far_field_distance(g) == doctest::Approx(2.9).epsilon(0.035));
}

TEST_CASE("far-field distance of a single cell") {
    ArrayGeometry g(1, 1, 0.0046, 26e9);
    double diag = 0.0046 * std::sqrt(2.0);
    CHECK(far_field_distance(g) == doctest::Approx(2.0 * diag * diag / g.wavelength()));
    CHECK(far_field_distance(g) == doctest::Approx(0.00734).epsilon(0.01));
}

TEST_CASE("doubling the pitch quadruples the far-field distance") {
    ArrayGeometry a(10, 10, 0.004, 26e9);
    ArrayGeometry b(10, 10, 0.008, 26e9);
    CHECK(far_field_distance(b) == doctest::Approx(4.0 * far_field_distance(a)).epsilon(1e-12));
}

TEST_CASE("direction unit vectors are normalized") {
    for (double theta : {0.0, 15.0, 45.0, 88.5, 90.0})
        for (double phi : {0.0, 90.0, 123.4, 359.0}) {
            Vec3 u = Direction(theta, phi).unit_vector();
            CHECK(std::abs(norm(u) - 1.0) < 1e-12);
        }
}

TEST_CASE("invalid geometry and directions are rejected") {
    CHECK_THROWS_AS(ArrayGeometry(0, 5, 0.0046, 26e9), ValidationError);
    CHECK_THROWS_AS(ArrayGeometry(5, 5, 0.0, 26e9), ValidationError);
    CHECK_THROWS_AS(ArrayGeometry(5, 5, 0.0046, -1.0), ValidationError);
    CHECK_THROWS_AS(Direction(-1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(Direction(90.5, 0.0), ValidationError);
    CHECK(Direction(30.0, -90.0).phi_deg == doctest::Approx(270.0));
}
