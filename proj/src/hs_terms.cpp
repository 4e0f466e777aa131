#include "anharm/hs_terms.hpp"

#include <cmath>
#include <stdexcept>

namespace anharm {

namespace {

void check_z(double z) {
    if (!(z > 0.0))
        throw std::domain_error("hs_terms: z must be > 0");
}

void check_x(double x) {
    if (!(x >= 0.0))
        throw std::domain_error("hs_terms: x must be >= 0");
}

void check_order(int k) {
    if (k < 0 || k > 3)
        throw std::invalid_argument("hs_terms: order k must be in [0, 3]");
}

template <class T>
T sq(T a) { return a * a; }

// E^(0) = Z^{-2/3} (n + 1/2)^2
template <class T>
T e0_impl(double n, T z) {
    using std::pow;
    return pow(z, -2.0 / 3.0) * sq(n + 0.5);
}

// E^(1) = Z^{-2/3} [ (2n+1)/4 Z(1+X) - (10n^2+10n+1)/16 ]
template <class T>
T e1_impl(double n, T z, T x) {
    using std::pow;
    return pow(z, -2.0 / 3.0) *
           ((2.0 * n + 1.0) / 4.0 * z * (1.0 + x)
            - (10.0 * n * n + 10.0 * n + 1.0) / 16.0);
}

// E^(2), overall minus sign included.
template <class T>
T e2_impl(double n, T z, T x) {
    using std::pow;
    const T u = z * (1.0 - x); // Z(1-X)
    const double a1 = 3.0 * (n * n * n * n + 2.0 * n * n * n - 2.0 * n * n - 3.0 * n - 3.0)
                      / (128.0 * (2.0 * n - 3.0) * (2.0 * n + 5.0));
    const T a2 = -(n * (n - 1.0) / (32.0 * (2.0 * n - 1.0))) * sq(u - (2.0 * n - 1.0) / 2.0);
    const T a3 = ((n + 1.0) * (n + 2.0) / (32.0 * (2.0 * n + 3.0))) * sq(u - (2.0 * n + 3.0) / 2.0);
    return -pow(z, -2.0 / 3.0) * (T(a1) + a2 + a3);
}

// <n1|n1>, four groups.
template <class T>
T norm1_impl(double n, T z, T x) {
    const T w = z * (1.0 - x) / 4.0; // Z(1-X)/4
    return ((n + 1.0) * (n + 2.0) / (4.0 * sq(2.0 * n + 3.0))) * sq(w - (2.0 * n + 3.0) / 8.0)
         + (n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0) / (4096.0 * sq(2.0 * n + 5.0))
         + (n * (n - 1.0) / (4.0 * sq(2.0 * n - 1.0))) * sq(w - (2.0 * n - 1.0) / 8.0)
         + n * (n - 1.0) * (n - 2.0) * (n - 3.0) / (4096.0 * sq(2.0 * n - 3.0));
}

// E^(3), nine additive groups; the braced final group multiplies the
// E^(1) bracket by the state norm.
template <class T>
T e3_impl(double n, T z, T x) {
    using std::pow;
    const T w = z * (1.0 - x) / 4.0; // Z(1-X)/4
    const T s = z * (1.0 + x);       // Z(1+X)

    const T g1 = ((n + 1.0) * (n + 2.0) / (4.0 * sq(2.0 * n + 3.0)))
               * sq(w - (2.0 * n + 3.0) / 8.0)
               * ((2.0 * n + 5.0) / 4.0 * s - (10.0 * n * n + 50.0 * n + 61.0) / 16.0);

    const T g2 = (n * (n - 1.0) / (4.0 * sq(2.0 * n - 1.0)))
               * sq(w - (2.0 * n - 1.0) / 8.0)
               * ((2.0 * n - 3.0) / 4.0 * s - (10.0 * n * n - 30.0 * n + 21.0) / 16.0);

    const T g3 = ((n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0)
                  / (64.0 * (2.0 * n + 5.0) * (2.0 * n + 3.0)))
               * (w - (2.0 * n + 3.0) / 8.0) * (w - (2.0 * n + 7.0) / 8.0);

    const T g4 = -(n * (n - 1.0) * (n + 1.0) * (n + 2.0)
                   / (32.0 * (2.0 * n + 3.0) * (2.0 * n - 1.0)))
               * (w - (2.0 * n - 1.0) / 8.0) * (w - (2.0 * n + 3.0) / 8.0);

    const T g5 = (n * (n - 1.0) * (n - 2.0) * (n - 3.0)
                  / (64.0 * (2.0 * n - 1.0) * (2.0 * n - 3.0)))
               * (w - (2.0 * n - 5.0) / 8.0) * (w - (2.0 * n - 1.0) / 8.0);

    const T g6 = ((n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0)
                  / (4096.0 * sq(2.0 * n + 5.0)))
               * ((2.0 * n + 9.0) / 4.0 * s - (10.0 * n * n + 90.0 * n + 201.0) / 16.0);

    const T g7 = (n * (n - 1.0) * (n - 2.0) * (n - 3.0)
                  / (4096.0 * sq(2.0 * n - 3.0)))
               * ((2.0 * n - 7.0) / 4.0 * s - (10.0 * n * n - 70.0 * n + 121.0) / 16.0);

    const T brace = ((n + 1.0) * (n + 2.0) / (4.0 * sq(2.0 * n + 3.0))) * sq(w - (2.0 * n + 3.0) / 8.0)
                  + (n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0) / (4096.0 * sq(2.0 * n + 5.0))
                  + (n * (n - 1.0) / (4.0 * sq(2.0 * n - 1.0))) * sq(w - (2.0 * n - 1.0) / 8.0)
                  + n * (n - 1.0) * (n - 2.0) * (n - 3.0) / (4096.0 * sq(2.0 * n - 3.0));

    const T g8 = -brace * ((2.0 * n + 1.0) / 4.0 * s - (10.0 * n * n + 10.0 * n + 1.0) / 16.0);

    return pow(z, -2.0 / 3.0) * (g1 + g2 + g3 + g4 + g5 + g6 + g7 + g8);
}

template <class T>
T partial_sum_impl(double n, T z, double g, int k) {
    using std::pow;
    const T x = g * pow(z, -2.0 / 3.0);
    T acc = e0_impl(n, z);
    if (k >= 1) acc += e1_impl(n, z, x);
    if (k >= 2) acc += e2_impl(n, z, x);
    if (k >= 3) acc += e3_impl(n, z, x);
    return acc;
}

template <class T>
T h_expect_1_impl(double n, T z, double g) {
    using std::pow;
    const T x = g * pow(z, -2.0 / 3.0);
    return e0_impl(n, z) + e1_impl(n, z, x)
         + (e2_impl(n, z, x) + e3_impl(n, z, x)) / (1.0 + norm1_impl(n, z, x));
}

} // namespace

double e0(Level n, double z) {
    check_z(z);
    return e0_impl(n.n, z);
}

double e1(Level n, double z, double x) {
    check_z(z);
    check_x(x);
    return e1_impl(n.n, z, x);
}

double e2(Level n, double z, double x) {
    check_z(z);
    check_x(x);
    return e2_impl(n.n, z, x);
}

double e3(Level n, double z, double x) {
    check_z(z);
    check_x(x);
    return e3_impl(n.n, z, x);
}

double first_order_norm(Level n, double z, double x) {
    check_z(z);
    check_x(x);
    return norm1_impl(n.n, z, x);
}

HSTermValues hs_terms(Level n, double z, const OscillatorModel& model) {
    check_z(z);
    const double x = x_of(z, model);
    HSTermValues v;
    v.e0 = e0_impl(double(n.n), z);
    v.e1 = e1_impl(double(n.n), z, x);
    v.e2 = e2_impl(double(n.n), z, x);
    v.e3 = e3_impl(double(n.n), z, x);
    v.norm1 = norm1_impl(double(n.n), z, x);
    v.z = z;
    v.x = x;
    v.n = n.n;
    return v;
}

double partial_sum(Level n, double z, const OscillatorModel& model, int k) {
    check_z(z);
    check_order(k);
    return partial_sum_impl(double(n.n), z, model.g, k);
}

double h_expect_0(Level n, double z, const OscillatorModel& model) {
    return partial_sum(n, z, model, 1);
}

double h_expect_1(Level n, double z, const OscillatorModel& model) {
    check_z(z);
    return h_expect_1_impl(double(n.n), z, model.g);
}

Dual partial_sum(Level n, Dual z, const OscillatorModel& model, int k) {
    check_z(z.v);
    check_order(k);
    return partial_sum_impl(double(n.n), z, model.g, k);
}

Dual h_expect_0(Level n, Dual z, const OscillatorModel& model) {
    return partial_sum(n, z, model, 1);
}

Dual h_expect_1(Level n, Dual z, const OscillatorModel& model) {
    check_z(z.v);
    return h_expect_1_impl(double(n.n), z, model.g);
}

double partial_sum_dz(Level n, double z, const OscillatorModel& model, int k) {
    return partial_sum(n, Dual(z, 1.0), model, k).d;
}

double h_expect_0_dz(Level n, double z, const OscillatorModel& model) {
    return h_expect_0(n, Dual(z, 1.0), model).d;
}

double h_expect_1_dz(Level n, double z, const OscillatorModel& model) {
    return h_expect_1(n, Dual(z, 1.0), model).d;
}

double XPolynomial::eval(double x) const {
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;)
        acc = acc * x + coeffs[j];
    return acc;
}

XPolynomial x_polynomial(Level n, double z, int k) {
    check_z(z);
    check_order(k);

    // Sample the order-k partial sum at the integer nodes X = 0..k and
    // convert the Newton divided-difference form to monomial coefficients.
    std::vector<double> node(k + 1), val(k + 1);
    for (int j = 0; j <= k; ++j) {
        const double x = double(j);
        node[j] = x;
        double acc = e0_impl(double(n.n), z);
        if (k >= 1) acc += e1_impl(double(n.n), z, x);
        if (k >= 2) acc += e2_impl(double(n.n), z, x);
        if (k >= 3) acc += e3_impl(double(n.n), z, x);
        val[j] = acc;
    }

    std::vector<double> dd = val;
    for (int lvl = 1; lvl <= k; ++lvl)
        for (int j = k; j >= lvl; --j)
            dd[j] = (dd[j] - dd[j - 1]) / (node[j] - node[j - lvl]);

    std::vector<double> coeffs(k + 1, 0.0);
    for (int j = k; j >= 0; --j) {
        // coeffs <- coeffs*(X - node[j]) + dd[j]
        for (int c = k; c >= 1; --c)
            coeffs[c] = coeffs[c - 1] - node[j] * coeffs[c];
        coeffs[0] = dd[j] - node[j] * coeffs[0];
    }

    XPolynomial poly;
    poly.coeffs = std::move(coeffs);
    poly.n = n.n;
    poly.z = z;
    poly.order = k;
    return poly;
}

} // namespace anharm
