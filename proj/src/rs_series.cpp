#include "anharm/rs_series.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace anharm {

RSCoefficients rs_coeffs(Level lvl) {
    // Exact integer numerators over power-of-two denominators, converted to
    // double once at the end.
    const std::int64_t n = lvl.n;
    const std::int64_t n2 = n * n;
    const std::int64_t n3 = n2 * n;
    const std::int64_t n4 = n2 * n2;

    RSCoefficients c;
    c.c0 = double(2 * n + 1) / 2.0;
    c.c1 = double(3 * (2 * n2 + 2 * n + 1)) / 16.0;
    c.c2 = -double(34 * n3 + 51 * n2 + 59 * n + 21) / 128.0;
    c.c3 = double(3 * (125 * n4 + 250 * n3 + 472 * n2 + 347 * n + 111)) / 1024.0;
    return c;
}

double rs_partial_sum(Level n, double lambda, int jmax) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::domain_error("rs_partial_sum: lambda must be finite and >= 0");
    if (jmax < 0 || jmax > 3)
        throw std::invalid_argument("rs_partial_sum: jmax must be in [0, 3]");

    const RSCoefficients c = rs_coeffs(n);
    const double cj[4] = {c.c0, c.c1, c.c2, c.c3};
    double acc = 0.0;
    double lj = 1.0;
    for (int j = 0; j <= jmax; ++j) {
        acc += cj[j] * lj;
        lj *= lambda;
    }
    return acc;
}

} // namespace anharm
