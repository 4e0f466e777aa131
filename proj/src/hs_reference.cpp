#include "anharm/hs_reference.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace anharm {

namespace {

struct Mat {
    int n = 0;
    std::vector<double> a;

    explicit Mat(int size) : n(size), a(std::size_t(size) * size, 0.0) {}

    double& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    double at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

Mat mul(const Mat& x, const Mat& y) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const double xik = x.at(i, k);
            if (xik == 0.0)
                continue;
            for (int j = 0; j < x.n; ++j)
                r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            r.at(j, i) = x.at(i, j);
    return r;
}

} // namespace

ReferenceTerms reference_terms(Level lvl, double z, double x, int basis) {
    if (!(z > 0.0))
        throw std::domain_error("reference_terms: z must be > 0");
    if (!(x >= 0.0))
        throw std::domain_error("reference_terms: x must be >= 0");

    const int n = lvl.n;
    const int N = basis > 0 ? basis : n + 24;
    if (N < n + 9)
        throw std::invalid_argument("reference_terms: basis too small");

    const double omega = std::cbrt(z);
    const double msq = x * omega * omega;

    // Ladder matrix a|k> = sqrt(k)|k-1>, then q and the real factor ptil of
    // the momentum (p = i ptil, so p^2 = -ptil^2, p^4 = ptil^4).
    Mat A(N);
    for (int k = 1; k < N; ++k)
        A.at(k - 1, k) = std::sqrt(double(k));
    const Mat At = transpose(A);

    Mat Q(N), Ptil(N);
    const double qs = 1.0 / std::sqrt(2.0 * omega);
    const double ps = std::sqrt(omega / 2.0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Q.at(i, j) = qs * (A.at(i, j) + At.at(i, j));
            Ptil.at(i, j) = ps * (At.at(i, j) - A.at(i, j));
        }

    const Mat q2 = mul(Q, Q);
    Mat p2 = mul(Ptil, Ptil);
    for (double& v : p2.a)
        v = -v;
    const Mat p4 = mul(p2, p2);
    const Mat p2q2 = mul(p2, q2);
    const Mat q2p2 = mul(q2, p2);

    // V = H - H0 = p^2/2 + msq q^2/2 - p^4/(4 w^4) - (p^2 q^2 + q^2 p^2)/(4 w^2)
    Mat V(N);
    const double w2 = omega * omega;
    const double w4 = w2 * w2;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            V.at(i, j) = 0.5 * p2.at(i, j) + 0.5 * msq * q2.at(i, j)
                       - p4.at(i, j) / (4.0 * w4)
                       - (p2q2.at(i, j) + q2p2.at(i, j)) / (4.0 * w2);

    // Unperturbed energies (k+1/2)^2 / Z^{2/3}
    std::vector<double> eps(N);
    const double zpow = std::pow(z, -2.0 / 3.0);
    for (int k = 0; k < N; ++k)
        eps[k] = zpow * (double(k) + 0.5) * (double(k) + 0.5);

    ReferenceTerms t;
    t.e1 = V.at(n, n);

    for (int k = 0; k < N; ++k) {
        if (k == n)
            continue;
        const double vnk = V.at(n, k);
        const double dk = eps[n] - eps[k];
        t.e2 += vnk * vnk / dk;
        t.norm1 += vnk * vnk / (dk * dk);
    }

    double e3_double = 0.0;
    for (int k = 0; k < N; ++k) {
        if (k == n)
            continue;
        const double dk = eps[n] - eps[k];
        for (int l = 0; l < N; ++l) {
            if (l == n)
                continue;
            const double dl = eps[n] - eps[l];
            e3_double += V.at(n, k) * V.at(k, l) * V.at(l, n) / (dk * dl);
        }
    }
    t.e3 = e3_double - t.e1 * t.norm1;

    return t;
}

} // namespace anharm
