#include <doctest.h>

#include <cmath>
#include <random>

#include "szego/ising.hpp"

using namespace szego;

TEST_CASE("chain and configuration validation") {
    CHECK_THROWS_AS(IsingChain({}, 1.0), DomainError);
    CHECK_THROWS_AS(IsingChain({1.0, -0.5}, 1.0), DomainError);
    CHECK_THROWS_AS(IsingChain({1.0}, 0.0), DomainError);
    CHECK_THROWS_AS(IsingChain({1.0}, 1.0, -1.0), DomainError);
    CHECK_THROWS_AS(SpinConfig({1, 0, -1}), DomainError);

    IsingChain chain({1.0, 2.0}, 2.0, 0.5);
    CHECK(chain.beta_inv() == doctest::Approx(1.0));
}

TEST_CASE("energy of explicit configurations") {
    IsingChain chain({1.0, 2.0, 0.5}, 1.0);
    // all spins up: E = -(J1+J2+J3 + 3H)
    CHECK(energy(SpinConfig({1, 1, 1}), chain, 0.3) ==
          doctest::Approx(-(3.5 + 0.9)).epsilon(1e-14));
    // one flip: bonds 3-1 and 2-3 flip sign
    CHECK(energy(SpinConfig({1, 1, -1}), chain, 0.3) ==
          doctest::Approx(-(1.0 - 2.0 - 0.5 + 0.3)).epsilon(1e-13));
    CHECK_THROWS_AS(energy(SpinConfig({1, 1}), chain, 0.0), DomainError);
}

TEST_CASE("partition polynomial: frozen two-site chain") {
    IsingChain chain({1.0, 1.0}, 1.0);
    PartitionPoly poly = partition_polynomial(chain);
    REQUIRE(poly.coefficients.size() == 3);
    CHECK(poly.coefficients[0] == doctest::Approx(std::exp(2.0)).epsilon(1e-13));
    CHECK(poly.coefficients[1] == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-13));
    CHECK(poly.coefficients[2] == doctest::Approx(std::exp(2.0)).epsilon(1e-13));
    for (double c : poly.coefficients) CHECK(c > 0.0);
}

TEST_CASE("partition polynomial agrees with the brute-force sum") {
    std::mt19937_64 gen(61);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(u(gen) * 8);
        std::vector<double> J;
        for (std::size_t i = 0; i < n; ++i) J.push_back(0.2 + 1.5 * u(gen));
        IsingChain chain(J, 0.5 + 2.0 * u(gen));
        PartitionPoly poly = partition_polynomial(chain);
        REQUIRE(poly.coefficients.size() == n + 1);
        for (double c : poly.coefficients) CHECK(c > 0.0);

        Complex h = std::polar(0.3 + 2.0 * u(gen), (u(gen) - 0.5) * 6.0);
        Complex z = partition_bruteforce(chain, h);
        Complex scaled = std::exp(0.5 * static_cast<double>(n) * std::log(h)) * z;
        Complex p = poly.eval(h);
        CHECK(std::abs(p - scaled) / std::abs(p) < 1e-11);
    }
    CHECK_THROWS_AS(partition_bruteforce(IsingChain({1.0}, 1.0), Complex{0.0}),
                    DomainError);
    CHECK_THROWS_AS(partition_bruteforce(IsingChain(std::vector<double>(30, 1.0), 1.0),
                                         Complex{1.0, 0.0}),
                    SizeError);
}

TEST_CASE("lee-yang zeros: frozen two-site values") {
    // alpha_j = exp(-2J) = 0.5 per site: zeros at +-arccos(-0.25)
    double J = 0.5 * std::log(2.0);
    IsingChain chain({J, J}, 1.0);
    ZeroSet zeros = leeyang_zeros(chain);
    REQUIRE(zeros.total_count() == 2);
    double expected = std::acos(-0.25);
    CHECK(zeros.zeros()[0].angle.theta == doctest::Approx(-expected).epsilon(1e-11));
    CHECK(zeros.zeros()[1].angle.theta == doctest::Approx(expected).epsilon(1e-11));

    // the zeros really kill the partition polynomial
    PartitionPoly poly = partition_polynomial(chain);
    Complex at = poly.eval(std::polar(1.0, expected));
    CHECK(std::abs(at) < 1e-12 * poly.coefficients[2] * 4.0);
}

TEST_CASE("lee-yang zeros equal discriminant zeros of the mapped word") {
    std::mt19937_64 gen(67);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(u(gen) * 8);
        std::vector<double> J;
        for (std::size_t i = 0; i < n; ++i) J.push_back(0.2 + 1.2 * u(gen));
        IsingChain chain(J, 1.0 + u(gen));
        ZeroSet ly = leeyang_zeros(chain);
        ZeroSet disc = discriminant_zeros(couplings_to_verblunsky(chain));
        REQUIRE(ly.total_count() == n);
        REQUIRE(disc.total_count() == n);
        CHECK(hausdorff_distance(ly.as_arcset(), disc.as_arcset()) < 1e-7);
    }
}

TEST_CASE("mapped word and zero-free arc") {
    IsingChain chain({1.0, 0.5}, 2.0);
    VerblunskyWord w = couplings_to_verblunsky(chain);
    REQUIRE(w.size() == 2);
    CHECK(w[0].alpha.real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(w[1].alpha.real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
    CHECK(w.real_positive());

    ArcSet arc = zero_free_arc(chain);
    double half = 2.0 * std::asin(std::exp(-1.0)); // sup J = 1.0
    REQUIRE(arc.arcs().size() == 1);
    CHECK(arc.arcs()[0].start == doctest::Approx(-half).epsilon(1e-12));
    CHECK(arc.arcs()[0].length == doctest::Approx(2.0 * half).epsilon(1e-12));

    ZeroSet zeros = leeyang_zeros(chain);
    CHECK(zeros.min_abs_angle() >= half - 1e-12);

    CHECK_THROWS_AS(zero_free_arc(-1.0, 1.0), DomainError);
}

TEST_CASE("coupling measure and induced coefficient measure") {
    CHECK_THROWS_AS(CouplingMeasure::from_atoms({}), DomainError);
    CHECK_THROWS_AS(CouplingMeasure::from_atoms({{-1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(CouplingMeasure::from_atoms({{1.0, 0.4}}), DomainError);
    CHECK_THROWS_AS(CouplingMeasure::uniform(2.0, 1.0), DomainError);

    auto atoms = CouplingMeasure::from_atoms({{1.0, 0.5}, {2.0, 0.5}});
    CHECK(atoms.sup_support() == 2.0);
    CHECK(atoms.draw(0.25) == 1.0);
    CHECK(atoms.draw(0.75) == 2.0);

    SingleSiteMeasure induced = induced_coefficient_measure(atoms, 1.0);
    REQUIRE(induced.is_atomic());
    CHECK(induced.min_support() == doctest::Approx(std::exp(-4.0)).epsilon(1e-14));

    auto interval = CouplingMeasure::uniform(0.5, 1.5);
    SingleSiteMeasure ind2 = induced_coefficient_measure(interval, 2.0);
    auto [a, b] = ind2.interval();
    CHECK(a == doctest::Approx(std::exp(-1.5)).epsilon(1e-14));
    CHECK(b == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("thermodynamic scan shrinks toward the limit spectrum") {
    auto measure = CouplingMeasure::uniform(0.4, 0.8);
    auto records = thermodynamic_scan(measure, 1.0, {20, 80}, 11);
    REQUIRE(records.size() == 2);
    CHECK(records[0].n == 20);
    CHECK(records[1].n == 80);
    CHECK(records[0].zeros.total_count() == 20);
    CHECK(records[1].zeros.total_count() == 80);
    // zeros respect the deterministic zero-free arc of the sup coupling...
    double half_inf = 2.0 * std::asin(std::exp(-2.0 * 0.8));
    for (const auto& rec : records)
        CHECK(rec.zeros.min_abs_angle() >= half_inf - 1e-9);
    // ... and the bigger lattice is at least as close (with sampling slack)
    CHECK(records[1].distance <= records[0].distance + 0.1);

    CHECK_THROWS_AS(thermodynamic_scan(measure, 1.0, {80, 20}, 11), DomainError);
}
