#pragma once

#include <cmath>

namespace anharm {

// First-order dual number: value plus derivative with respect to the scan
// variable.  Evaluating a formula in Dual arithmetic yields its exact
// term-wise derivative, so the Z-selection scans never differentiate a
// second transcription of the energy expressions.
struct Dual {
    double v = 0.0;
    double d = 0.0;

    constexpr Dual() = default;
    constexpr Dual(double value) : v(value), d(0.0) {}
    constexpr Dual(double value, double deriv) : v(value), d(deriv) {}
};

constexpr Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
constexpr Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
constexpr Dual operator-(Dual a) { return {-a.v, -a.d}; }
constexpr Dual operator*(Dual a, Dual b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d};
}
constexpr Dual operator/(Dual a, Dual b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

constexpr Dual& operator+=(Dual& a, Dual b) { a = a + b; return a; }
constexpr Dual& operator-=(Dual& a, Dual b) { a = a - b; return a; }
constexpr Dual& operator*=(Dual& a, Dual b) { a = a * b; return a; }

inline Dual pow(Dual a, double p) {
    return {std::pow(a.v, p), p * std::pow(a.v, p - 1.0) * a.d};
}

} // namespace anharm
