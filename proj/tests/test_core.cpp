#include <doctest.h>

#include <cmath>
#include <random>

#include "szego/core.hpp"

using namespace szego;

TEST_CASE("angle canonicalization and circle metric") {
    CHECK(Angle(3.0 * kPi).theta == doctest::Approx(-kPi).epsilon(1e-15));
    CHECK(Angle(kPi).theta == doctest::Approx(-kPi));
    CHECK(Angle(0.5).theta == doctest::Approx(0.5));
    CHECK(circle_distance(0.0, kPi) == doctest::Approx(kPi));
    CHECK(circle_distance(-3.0, 3.0) == doctest::Approx(kTwoPi - 6.0));

    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        double a = u(gen), b = u(gen), c = u(gen);
        CHECK(circle_distance(a, b) == doctest::Approx(circle_distance(b, a)));
        CHECK(circle_distance(a, c) <=
              circle_distance(a, b) + circle_distance(b, c) + 1e-12);
    }
}

TEST_CASE("transfer matrix closed form") {
    // alpha = 0 is the diagonal case
    Mat2 m = transfer_matrix(Verblunsky(0.0), Complex{0.0, 1.0});
    CHECK(std::abs(m.a - Complex{0.0, 1.0}) < 1e-15);
    CHECK(std::abs(m.b) == 0.0);
    CHECK(std::abs(m.c) == 0.0);
    CHECK(std::abs(m.d - 1.0) < 1e-15);

    m = transfer_matrix(Verblunsky(0.6), Complex{1.0, 0.0});
    CHECK(m.a.real() == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(m.b.real() == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(m.c.real() == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(m.d.real() == doctest::Approx(1.25).epsilon(1e-12));

    // det A = z
    auto z = CirclePoint::from_angle(kPi / 2.0);
    m = transfer_matrix(Verblunsky(0.5), z);
    CHECK(std::abs(m.det() - z.value) < 1e-12);

    CHECK_THROWS_AS(Verblunsky(Complex{1.0, 0.0}), InvalidCoefficientError);
}

TEST_CASE("U(1,1) membership and norm symmetry") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Mat2 J{1.0, 0.0, 0.0, -1.0};
    for (int i = 0; i < 2000; ++i) {
        double r = std::sqrt(u(gen)) * 0.999;
        double phi = kTwoPi * u(gen) - kPi;
        Verblunsky alpha(std::polar(r, phi));
        auto z = CirclePoint::from_angle(kTwoPi * u(gen) - kPi);
        Mat2 a = transfer_matrix(alpha, z);

        Mat2 g = a.adjoint() * J * a;
        CHECK(std::abs(g.a - 1.0) < 1e-12);
        CHECK(std::abs(g.b) < 1e-12);
        CHECK(std::abs(g.c) < 1e-12);
        CHECK(std::abs(g.d + 1.0) < 1e-12);
        CHECK(std::abs(a.det() - z.value) < 1e-12);
        // ||M|| = ||M^-1|| in U(1,1)
        CHECK(a.norm() == doctest::Approx(a.inverse().norm()).epsilon(1e-10));
    }
}

TEST_CASE("conjugated matrix closed form") {
    Mat2 b = conjugated_matrix(Verblunsky(0.5), Complex{1.0, 0.0});
    CHECK(b.a.real() == doctest::Approx(0.5773502691896258).epsilon(1e-12));
    CHECK(b.b.real() == doctest::Approx(0.0));
    CHECK(b.c.real() == doctest::Approx(0.0));
    CHECK(b.d.real() == doctest::Approx(1.7320508075688774).epsilon(1e-12));

    // alpha -> 0 approaches the identity (rotated by w = 1)
    Mat2 near_id = conjugated_matrix(Verblunsky(1e-12), Complex{1.0, 0.0});
    CHECK(std::abs(near_id.a - 1.0) < 1e-11);
    CHECK(std::abs(near_id.d - 1.0) < 1e-11);

    CHECK_THROWS_AS(conjugated_matrix(Verblunsky(Complex{0.1, 0.2}), Complex{1.0, 0.0}),
                    InvalidCoefficientError);
    CHECK_THROWS_AS(conjugated_matrix(Verblunsky(-0.5), Complex{1.0, 0.0}),
                    InvalidCoefficientError);
}

TEST_CASE("closed form equals the conjugation definition") {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        Verblunsky alpha(1e-6 + 0.999 * u(gen));
        Complex w = std::polar(1.0, (u(gen) - 0.5) * 2.0);
        Mat2 closed = conjugated_matrix(alpha, w);
        Mat2 defn = conjugated_matrix_by_definition(alpha, w);
        CHECK(std::abs(closed.a - defn.a) < 1e-12);
        CHECK(std::abs(closed.b - defn.b) < 1e-12);
        CHECK(std::abs(closed.c - defn.c) < 1e-12);
        CHECK(std::abs(closed.d - defn.d) < 1e-12);
    }
}

TEST_CASE("principal root picks the half-angle branch") {
    CHECK(std::abs(principal_root(CirclePoint::from_angle(0.0), 0.5) - 1.0) < 1e-15);
    Complex w = principal_root(CirclePoint::from_angle(0.4), 0.3);
    CHECK(std::arg(w) == doctest::Approx(0.2).epsilon(1e-14));
    w = principal_root(CirclePoint::from_angle(-0.5), 0.3);
    CHECK(std::arg(w) == doctest::Approx(-0.25).epsilon(1e-14));

    CHECK_THROWS_AS(principal_root(CirclePoint::from_angle(kPi), 0.3), OutOfGapError);
}

TEST_CASE("cone constants") {
    auto cc = cone_constants(0.5, Complex{1.0, 0.0});
    CHECK(cc.C == doctest::Approx(1.7320508).epsilon(1e-7));
    CHECK(cc.kappa == doctest::Approx(1.7320508).epsilon(1e-7));

    cc = cone_constants(0.3, std::polar(1.0, 0.2));
    CHECK(cc.C == doctest::Approx(1.362770).epsilon(1e-6));
    CHECK(cc.kappa == doctest::Approx(1.136937).epsilon(1e-6));

    // A -> 0+ gives C -> 1
    cc = cone_constants(1e-6, Complex{1.0, 0.0});
    CHECK(cc.C == doctest::Approx(1.0).epsilon(1e-5));

    CHECK_THROWS_AS(cone_constants(0.5, std::polar(1.0, 1.3)), AdmissibilityError);
}

TEST_CASE("kappa > 1 for admissible parameters") {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    while (checked < 10000) {
        double A = 0.01 + 0.98 * u(gen);
        double arg_w = (u(gen) - 0.5) * 2.0 * std::asin(A);
        Complex w = std::polar(1.0, arg_w);
        if (!admissible_root(w, A)) continue;
        CHECK(cone_constants(A, w).kappa > 1.0);
        ++checked;
    }
}

TEST_CASE("gap arc") {
    ArcSet arc = gap_arc(0.5);
    REQUIRE(arc.arcs().size() == 1);
    CHECK(arc.arcs()[0].start == doctest::Approx(-kPi / 3.0).epsilon(1e-12));
    CHECK(arc.arcs()[0].length == doctest::Approx(kTwoPi / 3.0).epsilon(1e-12));

    CHECK(gap_arc(0.0).empty());

    arc = gap_arc(std::sqrt(2.0) / 2.0);
    CHECK(arc.arcs()[0].start == doctest::Approx(-kPi / 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(gap_arc(1.0), DomainError);
    CHECK_THROWS_AS(gap_arc(-0.1), DomainError);
}
