#pragma once

#include "anharm/model.hpp"

namespace anharm {

// Coefficients of the weak-coupling expansion E_n/m = sum_j c_j(n) lambda^j,
// lambda = (M/m)^3. Signs alternate from c1 on; the series is asymptotic and
// only the first four coefficients are used.
struct RSCoefficients {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

RSCoefficients rs_coeffs(Level n);

// Partial sum m * sum_{j<=jmax} c_j lambda^j in units where m = 1.
// Note the unit is m here, not the quartic scale used elsewhere.
double rs_partial_sum(Level n, double lambda, int jmax);

} // namespace anharm
