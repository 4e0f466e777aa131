#include <doctest.h>

#include "anharm/hs_reference.hpp"
#include "anharm/hs_terms.hpp"
#include "anharm/model.hpp"

#include <cmath>
#include <random>

using namespace anharm;

namespace {

double u01(std::mt19937& rng) { return double(rng()) / 4294967296.0; }

double rel_gap(double a, double b) {
    return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-12});
}

} // namespace

TEST_CASE("e0 known values") {
    CHECK(e0(Level(0), 1.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(e0(Level(2), 1.0) == doctest::Approx(6.25).epsilon(1e-14));
    CHECK(e0(Level(0), 1.5) == doctest::Approx(0.19078570709222198).epsilon(1e-13));
    CHECK_THROWS_AS(e0(Level(0), 0.0), std::domain_error);
    CHECK_THROWS_AS(e0(Level(0), -1.0), std::domain_error);
}

TEST_CASE("e1 known values") {
    CHECK(e1(Level(0), 0.25, 0.0) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(e1(Level(0), 1.0, 0.0) == doctest::Approx(3.0 / 16.0).epsilon(1e-14));
    CHECK(e1(Level(1), 1.0, 1.0) == doctest::Approx(0.1875).epsilon(1e-14));
    CHECK_THROWS_AS(e1(Level(0), 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(e1(Level(0), 1.0, -0.5), std::domain_error);
}

TEST_CASE("e2 known values") {
    // hand-evaluated from the printed groups: -(3/640 + (1/48)(1/4)) = -19/1920
    CHECK(e2(Level(0), 1.0, 0.0) == doctest::Approx(-19.0 / 1920.0).epsilon(1e-13));
    // z(1-x) = 3/2 kills the (n+1)(n+2) bracket at n=0, leaving the constant
    // group times the overall z^{-2/3} prefactor
    CHECK(e2(Level(0), 1.5, 0.0) ==
          doctest::Approx(-(3.0 / 640.0) * std::pow(1.5, -2.0 / 3.0)).epsilon(1e-13));
    CHECK_THROWS_AS(e2(Level(0), -1.0, 0.0), std::domain_error);
}

TEST_CASE("e3 known value at the vanishing-bracket point") {
    // only two groups survive at n=0, z=3/2, x=0; frozen from a
    // high-precision hand evaluation of the survivors
    CHECK(e3(Level(0), 1.5, 0.0) ==
          doctest::Approx(-0.0016991852037901020).epsilon(1e-12));
    CHECK_THROWS_AS(e3(Level(0), 0.0, 0.0), std::domain_error);
}

TEST_CASE("first_order_norm known value and positivity") {
    // first and third groups vanish at z(1-x) = 3/2, n = 0 kills the rest:
    // 24/(4096*25)
    CHECK(first_order_norm(Level(0), 1.5, 0.0) ==
          doctest::Approx(24.0 / 102400.0).epsilon(1e-13));

    std::mt19937 rng(7u);
    for (int i = 0; i < 50; ++i) {
        const Level n(int(u01(rng) * 9.0));
        const double z = 0.05 + 10.0 * u01(rng);
        const double x = 3.0 * u01(rng);
        CHECK(first_order_norm(n, z, x) >= 0.0);
    }
}

TEST_CASE("partial_sum is cumulative and validates its order") {
    const OscillatorModel m(0.7);
    const Level n(3);
    const double z = 2.3;
    const double x = x_of(z, m);
    CHECK(partial_sum(n, z, m, 0) == doctest::Approx(e0(n, z)).epsilon(1e-14));
    CHECK(partial_sum(n, z, m, 3) ==
          doctest::Approx(e0(n, z) + e1(n, z, x) + e2(n, z, x) + e3(n, z, x))
              .epsilon(1e-13));
    CHECK_THROWS_AS(partial_sum(n, z, m, 4), std::invalid_argument);
    CHECK_THROWS_AS(partial_sum(n, z, m, -1), std::invalid_argument);
    CHECK_THROWS_AS(partial_sum(n, 0.0, m, 2), std::domain_error);
}

TEST_CASE("k=1 partial sum at its stationary point") {
    // frozen from the closed form 3^{4/3}/2^{7/3} (1/8)^{1/3}
    const OscillatorModel m(0.0);
    CHECK(partial_sum(Level(0), 1.5, m, 1) ==
          doctest::Approx(0.42926784095749945).epsilon(1e-13));
}

TEST_CASE("h_expect_0 is the k=1 partial sum") {
    std::mt19937 rng(11u);
    for (int i = 0; i < 100; ++i) {
        const Level n(int(u01(rng) * 6.0));
        const double z = 0.05 + 15.0 * u01(rng);
        const OscillatorModel m(5.0 * u01(rng));
        CHECK(h_expect_0(n, z, m) == partial_sum(n, z, m, 1));
    }
}

TEST_CASE("h_expect_1 recombines the snapshot fields") {
    std::mt19937 rng(13u);
    for (int i = 0; i < 50; ++i) {
        const Level n(int(u01(rng) * 6.0));
        const double z = 0.05 + 15.0 * u01(rng);
        const OscillatorModel m(5.0 * u01(rng));
        const HSTermValues t = hs_terms(n, z, m);
        const double expected = t.e0 + t.e1 + (t.e2 + t.e3) / (1.0 + t.norm1);
        CHECK(h_expect_1(n, z, m) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("hs_terms snapshot matches the scalar operations") {
    const OscillatorModel m(1.3);
    const Level n(4);
    const double z = 3.1;
    const HSTermValues t = hs_terms(n, z, m);
    const double x = x_of(z, m);
    CHECK(t.x == doctest::Approx(x).epsilon(1e-15));
    CHECK(t.z == z);
    CHECK(t.n == 4);
    CHECK(t.e0 == doctest::Approx(e0(n, z)).epsilon(1e-15));
    CHECK(t.e1 == doctest::Approx(e1(n, z, x)).epsilon(1e-15));
    CHECK(t.e2 == doctest::Approx(e2(n, z, x)).epsilon(1e-15));
    CHECK(t.e3 == doctest::Approx(e3(n, z, x)).epsilon(1e-15));
    CHECK(t.norm1 == doctest::Approx(first_order_norm(n, z, x)).epsilon(1e-15));
}

TEST_CASE("corrections match the brute-force perturbation sums") {
    std::mt19937 rng(12345u);
    for (int i = 0; i < 20; ++i) {
        const Level n(int(u01(rng) * 6.0));
        const double z = 0.1 * std::exp(u01(rng) * std::log(100.0));
        const double x = 2.0 * u01(rng);
        const ReferenceTerms ref = reference_terms(n, z, x);
        CHECK(rel_gap(e1(n, z, x), ref.e1) <= 1e-8);
        CHECK(rel_gap(e2(n, z, x), ref.e2) <= 1e-8);
        CHECK(rel_gap(e3(n, z, x), ref.e3) <= 1e-8);
        CHECK(rel_gap(first_order_norm(n, z, x), ref.norm1) <= 1e-8);
    }
}

TEST_CASE("analytic z-derivatives match Richardson finite differences") {
    std::mt19937 rng(99u);
    for (int i = 0; i < 100; ++i) {
        const Level n(int(u01(rng) * 6.0));
        const double z = 0.2 + 10.0 * u01(rng);
        const OscillatorModel m(5.0 * u01(rng));
        const int k = 1 + int(u01(rng) * 3.0);

        const auto f = [&](double zz) { return partial_sum(n, zz, m, k); };
        const double h = 1e-3 * z;
        const double d1 = (f(z + h) - f(z - h)) / (2.0 * h);
        const double d2 = (f(z + h / 2.0) - f(z - h / 2.0)) / h;
        const double fd = (4.0 * d2 - d1) / 3.0;

        const double an = partial_sum_dz(n, z, m, k);
        CHECK(an == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("h_expect derivatives match finite differences") {
    const OscillatorModel m(0.4);
    for (const Level n : {Level(0), Level(2), Level(5)}) {
        for (double z : {0.7, 1.9, 6.3}) {
            const double h = 1e-4 * z;
            const double fd0 = (h_expect_0(n, z + h, m) - h_expect_0(n, z - h, m)) / (2.0 * h);
            const double fd1 = (h_expect_1(n, z + h, m) - h_expect_1(n, z - h, m)) / (2.0 * h);
            CHECK(h_expect_0_dz(n, z, m) == doctest::Approx(fd0).epsilon(1e-6));
            CHECK(h_expect_1_dz(n, z, m) == doctest::Approx(fd1).epsilon(1e-6));
        }
    }
}

TEST_CASE("x_polynomial known coefficients") {
    const XPolynomial p0 = x_polynomial(Level(0), 2.0, 0);
    REQUIRE(p0.coeffs.size() == 1);
    CHECK(p0.coeffs[0] == doctest::Approx(e0(Level(0), 2.0)).epsilon(1e-14));

    // linear-in-X part of the first correction at n=0 is z^{1/3}/4
    const XPolynomial p1 = x_polynomial(Level(0), 1.0, 1);
    REQUIRE(p1.coeffs.size() == 2);
    CHECK(p1.coeffs[1] == doctest::Approx(0.25).epsilon(1e-12));
    const XPolynomial p8 = x_polynomial(Level(0), 8.0, 1);
    CHECK(p8.coeffs[1] == doctest::Approx(0.5).epsilon(1e-12));

    // constant term is the pure-quartic partial sum
    const OscillatorModel quartic(0.0);
    const XPolynomial p3 = x_polynomial(Level(2), 1.7, 3);
    CHECK(p3.coeffs[0] ==
          doctest::Approx(partial_sum(Level(2), 1.7, quartic, 3)).epsilon(1e-12));
}

TEST_CASE("x_polynomial reproduces the partial sum at arbitrary X") {
    std::mt19937 rng(555u);
    for (int i = 0; i < 60; ++i) {
        const Level n(int(u01(rng) * 9.0));
        const double z = 0.1 + 9.9 * u01(rng);
        const int k = int(u01(rng) * 4.0);
        const XPolynomial poly = x_polynomial(n, z, k);
        REQUIRE(int(poly.coeffs.size()) == k + 1);
        for (int j = 0; j < 10; ++j) {
            const double x = 4.0 * u01(rng);
            const OscillatorModel m(x * std::pow(z, 2.0 / 3.0));
            const double direct = partial_sum(n, z, m, k);
            CHECK(rel_gap(poly.eval(x), direct) <= 1e-10);
        }
    }
}
