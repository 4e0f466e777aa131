#include <doctest.h>

#include "anharm/model.hpp"

#include <cmath>
#include <limits>

using namespace anharm;

TEST_CASE("x_of known values") {
    CHECK(x_of(1.0, OscillatorModel(0.0)) == 0.0);
    CHECK(x_of(8.0, OscillatorModel(4.0)) == doctest::Approx(1.0).epsilon(1e-14));
    // 1.5^{-2/3}, frozen from an independent high-precision evaluation
    CHECK(x_of(1.5, OscillatorModel(1.0)) ==
          doctest::Approx(0.7631428283688879).epsilon(1e-14));
}

TEST_CASE("x_of rejects non-positive z") {
    const OscillatorModel m(1.0);
    CHECK_THROWS_AS(x_of(0.0, m), std::domain_error);
    CHECK_THROWS_AS(x_of(-2.0, m), std::domain_error);
}

TEST_CASE("x_of inverts exactly against z^{2/3}") {
    const OscillatorModel m(3.7);
    for (double ze = -3.0; ze <= 3.0; ze += 0.25) {
        const double z = std::pow(10.0, ze);
        CHECK(x_of(z, m) * std::pow(z, 2.0 / 3.0) ==
              doctest::Approx(m.g).epsilon(1e-13));
    }
}

TEST_CASE("lambda_of known values and infinite-coupling marker") {
    CHECK(lambda_of(OscillatorModel(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lambda_of(OscillatorModel(0.25)) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(std::isinf(lambda_of(OscillatorModel(0.0))));
}

TEST_CASE("lambda round-trips through from_lambda") {
    for (double le = -3.0; le <= 3.0; le += 0.25) {
        const double lambda = std::pow(10.0, le);
        const OscillatorModel m = OscillatorModel::from_lambda(lambda);
        CHECK(lambda_of(m) == doctest::Approx(lambda).epsilon(1e-14));
    }
    CHECK(OscillatorModel::from_lambda(std::numeric_limits<double>::infinity()).g == 0.0);
}

TEST_CASE("model and level validation") {
    CHECK_THROWS_AS(OscillatorModel(-0.1), std::domain_error);
    CHECK_THROWS_AS(OscillatorModel(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(OscillatorModel(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(OscillatorModel::from_lambda(0.0), std::domain_error);
    CHECK_THROWS_AS(OscillatorModel::from_lambda(-1.0), std::domain_error);
    CHECK_THROWS_AS(Level(-1), std::domain_error);
    CHECK(Level(0).n == 0);
    CHECK(OscillatorModel(0.0).g == 0.0);
}

TEST_CASE("to_caller applies the energy unit exactly") {
    const OscillatorModel m(2.0, 7.5);
    CHECK(m.to_caller(0.5) == 0.5 * 7.5);
    CHECK(m.to_caller(0.0) == 0.0);
}
