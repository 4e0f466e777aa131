#pragma once

#include "anharm/model.hpp"

namespace anharm {

struct ReferenceTerms {
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
    double norm1 = 0.0;
};

// Brute-force first/second/third-order perturbation sums for the regulated
// split, built from ladder-operator matrix elements of the residual
// interaction in a truncated basis. Independent of the closed-form term
// transcriptions; used as a test oracle only. The interaction connects |n>
// to |n+-4> and closer, so truncation at n+24 is exact up to roundoff.
ReferenceTerms reference_terms(Level n, double z, double x, int basis = 0);

} // namespace anharm
