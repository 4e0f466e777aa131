#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace anharm {

// Dimensionless description of the Hamiltonian
//
//     H = p^2/2 + m^2 q^2/2 + M^3 q^4/4
//
// parameterized by g = (m/M)^2 with M as the energy unit.  All kernels work
// in units of M; energy_unit converts to caller units at output boundaries.
// g = 0 is the pure quartic case (m = 0), where the weak-coupling parameter
// lambda = (M/m)^3 is infinite.
struct OscillatorModel {
    double g = 0.0;
    double energy_unit = 1.0;

    OscillatorModel() = default;

    explicit OscillatorModel(double g_in, double energy_unit_in = 1.0)
        : g(g_in), energy_unit(energy_unit_in) {
        if (!(g >= 0.0))
            throw std::domain_error("OscillatorModel: g must be >= 0");
        if (!(energy_unit > 0.0))
            throw std::domain_error("OscillatorModel: energy_unit must be > 0");
    }

    static OscillatorModel from_lambda(double lambda, double energy_unit = 1.0) {
        if (!(lambda > 0.0))
            throw std::domain_error("OscillatorModel: lambda must be > 0");
        if (std::isinf(lambda))
            return OscillatorModel(0.0, energy_unit);
        return OscillatorModel(std::pow(lambda, -2.0 / 3.0), energy_unit);
    }

    // energy/M -> caller units
    double to_caller(double e_over_m) const { return e_over_m * energy_unit; }
};

// Quantum number of a level, n >= 0.
struct Level {
    int n = 0;

    Level() = default;

    explicit Level(int n_in) : n(n_in) {
        if (n_in < 0)
            throw std::domain_error("Level: n must be >= 0");
    }
};

// X = m^2/Omega^2 = g / Z^{2/3}
inline double x_of(double z, const OscillatorModel& model) {
    if (!(z > 0.0))
        throw std::domain_error("x_of: z must be > 0");
    return model.g * std::pow(z, -2.0 / 3.0);
}

// lambda = (M/m)^3 = g^{-3/2}; +infinity marks the pure quartic case g = 0.
inline double lambda_of(const OscillatorModel& model) {
    if (model.g == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::pow(model.g, -1.5);
}

} // namespace anharm
