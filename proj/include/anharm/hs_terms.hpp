#pragma once

#include <vector>

#include "anharm/dual.hpp"
#include "anharm/model.hpp"

namespace anharm {

// The expansion built on the regulated split
//
//     H0 = (M^3/Omega^4) (p^2/2 + Omega^2 q^2/2)^2,   V = H - H0,
//
// with Z = (Omega/M)^3 and X = m^2/Omega^2 = g/Z^{2/3}.  The correction
// formulas below are kept in their printed grouped form rather than
// algebraically simplified, so every additive group can be checked against
// the inputs that make it vanish.

// Snapshot of the corrections and first-order state norm at one (n, Z).
struct HSTermValues {
    double e0 = 0.0;    // energy/M
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
    double norm1 = 0.0; // <n1|n1>, dimensionless
    double z = 0.0;
    double x = 0.0;
    int n = 0;
};

// Order-k partial sum expressed as a polynomial in X at fixed Z.
struct XPolynomial {
    std::vector<double> coeffs; // p_0..p_order, energy/M per power of X
    int n = 0;
    double z = 0.0;
    int order = 0;

    double eval(double x) const;
};

double e0(Level n, double z);
double e1(Level n, double z, double x);
double e2(Level n, double z, double x);
double e3(Level n, double z, double x);
double first_order_norm(Level n, double z, double x);

HSTermValues hs_terms(Level n, double z, const OscillatorModel& model);

// Sum_{j<=k} E^(j)(Z), 0 <= k <= 3, with X derived from (z, model).
double partial_sum(Level n, double z, const OscillatorModel& model, int k);

// <H>_n^(0) = E^(0) + E^(1)
double h_expect_0(Level n, double z, const OscillatorModel& model);

// <H>_n^(1) = E^(0) + E^(1) + (E^(2) + E^(3)) / (1 + <n1|n1>)
double h_expect_1(Level n, double z, const OscillatorModel& model);

// Dual-valued overloads; z.d seeds d/dZ and X inherits dX/dZ = -(2/3) X/Z.
Dual partial_sum(Level n, Dual z, const OscillatorModel& model, int k);
Dual h_expect_0(Level n, Dual z, const OscillatorModel& model);
Dual h_expect_1(Level n, Dual z, const OscillatorModel& model);

// Analytic d/dz of the corresponding objective.
double partial_sum_dz(Level n, double z, const OscillatorModel& model, int k);
double h_expect_0_dz(Level n, double z, const OscillatorModel& model);
double h_expect_1_dz(Level n, double z, const OscillatorModel& model);

// Coefficients p_0..p_k with Sum_j p_j X^j equal to the order-k partial sum
// identically in X, fitted exactly at the nodes X = 0..k.
XPolynomial x_polynomial(Level n, double z, int k);

} // namespace anharm
