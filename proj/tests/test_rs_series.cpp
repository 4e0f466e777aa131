#include <doctest.h>

#include "anharm/model.hpp"
#include "anharm/oracle.hpp"
#include "anharm/rs_series.hpp"

#include <cmath>
#include <limits>

using namespace anharm;

TEST_CASE("coefficients at n=0 and n=1 are the exact rationals") {
    const RSCoefficients c0 = rs_coeffs(Level(0));
    CHECK(c0.c0 == 0.5);
    CHECK(c0.c1 == 3.0 / 16.0);
    CHECK(c0.c2 == -21.0 / 128.0);
    CHECK(c0.c3 == 333.0 / 1024.0);

    const RSCoefficients c1 = rs_coeffs(Level(1));
    CHECK(c1.c0 == 1.5);
    CHECK(c1.c1 == 15.0 / 16.0);
}

TEST_CASE("coefficient signs alternate starting positive at c1") {
    for (int n = 0; n <= 20; ++n) {
        const RSCoefficients c = rs_coeffs(Level(n));
        CHECK(c.c0 == double(n) + 0.5);
        CHECK(c.c1 > 0.0);
        CHECK(c.c2 < 0.0);
        CHECK(c.c3 > 0.0);
    }
}

TEST_CASE("partial sums: harmonic limit and a pinned evaluation") {
    for (int n = 0; n <= 5; ++n)
        CHECK(rs_partial_sum(Level(n), 0.0, 3) == double(n) + 0.5);

    // 1/2 + 3/16 1e-2 - 21/128 1e-4 + 333/1024 1e-6, evaluated directly
    CHECK(rs_partial_sum(Level(0), 0.01, 3) ==
          doctest::Approx(0.5018589189453125).epsilon(1e-14));
}

TEST_CASE("truncation difference is bounded by the dropped terms") {
    const double lambda = 0.1;
    const RSCoefficients c = rs_coeffs(Level(0));
    const double diff = std::fabs(rs_partial_sum(Level(0), lambda, 3) -
                                  rs_partial_sum(Level(0), lambda, 1));
    CHECK(diff <= std::fabs(c.c2) * lambda * lambda +
                      std::fabs(c.c3) * lambda * lambda * lambda + 1e-15);
}

TEST_CASE("series terms stop shrinking at lambda = 0.5 for some n <= 5") {
    const double lambda = 0.5;
    bool grew = false;
    for (int n = 0; n <= 5; ++n) {
        const RSCoefficients c = rs_coeffs(Level(n));
        const double t2 = std::fabs(c.c2) * lambda * lambda;
        const double t3 = std::fabs(c.c3) * lambda * lambda * lambda;
        if (t3 > t2)
            grew = true;
    }
    CHECK(grew);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(rs_partial_sum(Level(0), -0.1, 3), std::domain_error);
    CHECK_THROWS_AS(rs_partial_sum(Level(0), std::numeric_limits<double>::infinity(), 3),
                    std::domain_error);
    CHECK_THROWS_AS(rs_partial_sum(Level(0), 0.1, 4), std::invalid_argument);
    CHECK_THROWS_AS(rs_partial_sum(Level(0), 0.1, -1), std::invalid_argument);
}

TEST_CASE("small-lambda agreement with the diagonalization oracle") {
    for (double lambda : {1e-3, 1e-2}) {
        const OscillatorModel m = OscillatorModel::from_lambda(lambda);
        OracleConfig cfg;
        cfg.rel_tol = 1e-12;
        const OracleResult ex = exact_energies(m, 3, cfg);
        for (int n = 0; n <= 3; ++n) {
            const double series = rs_partial_sum(Level(n), lambda, 3);
            const double exact = ex.energies[n] * std::cbrt(lambda); // M units -> m units
            // truncation remainder is the fourth-order term; its coefficient
            // grows roughly like (n+1)^5
            const double bound = 2.0 * std::pow(n + 1.0, 5.0) * std::pow(lambda, 4.0);
            CHECK(std::fabs(series - exact) <= bound);
        }
    }
}
