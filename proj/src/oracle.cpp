#include "anharm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace anharm {

namespace {

//==============================================================
// Symmetric eigensolver: Householder reduction to tridiagonal
// form followed by implicit-shift QL, eigenvalues only.
//==============================================================

void householder_tridiag(std::vector<double>& a, int n,
                         std::vector<double>& d, std::vector<double>& e) {
    auto A = [&](int i, int j) -> double& { return a[std::size_t(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k)
                scale += std::fabs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k)
                        g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k)
                        g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i)
        d[i] = A(i, i);
}

void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
    constexpr int kMaxIter = 50;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int i = 1; i < n; ++i)
        e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == kMaxIter)
                    throw NoConvergenceError("eigen_lowest: QL iteration limit reached");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = r = std::hypot(f, g);
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

std::vector<double> eigen_all_dense(std::vector<double> a, int n) {
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = a[0];
    } else {
        householder_tridiag(a, n, d, e);
        ql_implicit(d, e, n);
    }
    std::sort(d.begin(), d.end());
    return d;
}

bool couples_only_same_parity(const SymMatrix& h) {
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; j += 2)
            if (h.at(i, j) != 0.0)
                return false;
    return true;
}

std::vector<double> extract_block(const SymMatrix& h, int start) {
    const int nb = (h.n - start + 1) / 2;
    std::vector<double> a(std::size_t(nb) * nb);
    for (int bi = 0; bi < nb; ++bi)
        for (int bj = 0; bj < nb; ++bj)
            a[std::size_t(bi) * nb + bj] = h.at(start + 2 * bi, start + 2 * bj);
    return a;
}

} // namespace

SymMatrix build_hamiltonian(double msq, double quartic, double omega, int size) {
    if (!(omega > 0.0))
        throw std::domain_error("build_hamiltonian: omega must be > 0");
    if (size < 8)
        throw std::invalid_argument("build_hamiltonian: size must be >= 8");

    // q = (a + a^+)/sqrt(2 omega), p = i sqrt(omega/2)(a^+ - a):
    //   <i|p^2|i>   = (omega/2)(2i+1),    <i|p^2|i+2>   = -(omega/2) s2
    //   <i|q^2|i>   = (2i+1)/(2 omega),   <i|q^2|i+2>   = s2/(2 omega)
    //   <i|q^4|i>   = 3(2i^2+2i+1)/(4 omega^2)
    //   <i|q^4|i+2> = (4i+6) s2/(4 omega^2)
    //   <i|q^4|i+4> = s4/(4 omega^2)
    // with s2 = sqrt((i+1)(i+2)), s4 = sqrt((i+1)(i+2)(i+3)(i+4)).
    SymMatrix h(size);
    for (int i = 0; i < size; ++i) {
        const double di = double(i);
        h.at(i, i) = 0.25 * omega * (2.0 * di + 1.0)
                   + 0.25 * (msq / omega) * (2.0 * di + 1.0)
                   + quartic * 3.0 * (2.0 * di * di + 2.0 * di + 1.0) / (4.0 * omega * omega);
        if (i + 2 < size) {
            const double s2 = std::sqrt((di + 1.0) * (di + 2.0));
            h.set_sym(i, i + 2,
                      -0.25 * omega * s2
                      + 0.25 * (msq / omega) * s2
                      + quartic * (4.0 * di + 6.0) * s2 / (4.0 * omega * omega));
        }
        if (i + 4 < size) {
            const double s4 = std::sqrt((di + 1.0) * (di + 2.0) * (di + 3.0) * (di + 4.0));
            h.set_sym(i, i + 4, quartic * s4 / (4.0 * omega * omega));
        }
    }
    return h;
}

SymMatrix build_hamiltonian(const OscillatorModel& model, double omega, int size) {
    return build_hamiltonian(model.g, 0.25, omega, size);
}

std::vector<double> eigen_lowest(const SymMatrix& h, int count) {
    if (count < 0 || count > h.n)
        throw std::invalid_argument("eigen_lowest: count out of range");
    if (count == 0)
        return {};

    std::vector<double> vals;
    if (h.n >= 2 && couples_only_same_parity(h)) {
        for (int start : {0, 1}) {
            const int nb = (h.n - start + 1) / 2;
            if (nb == 0)
                continue;
            std::vector<double> block = extract_block(h, start);
            std::vector<double> ev = eigen_all_dense(std::move(block), nb);
            vals.insert(vals.end(), ev.begin(), ev.end());
        }
        std::sort(vals.begin(), vals.end());
    } else {
        vals = eigen_all_dense(h.a, h.n);
    }
    vals.resize(count);
    return vals;
}

OracleResult exact_energies(const OscillatorModel& model, int n_max,
                            const OracleConfig& config) {
    if (n_max < 0)
        throw std::invalid_argument("exact_energies: n_max must be >= 0");
    if (config.initial_size < 16)
        throw std::invalid_argument("exact_energies: initial_size must be >= 16");
    if (!(config.rel_tol > 0.0))
        throw std::domain_error("exact_energies: rel_tol must be > 0");

    const double m = std::sqrt(model.g);
    double omega = config.basis_omega;
    if (!(omega > 0.0))
        omega = std::max(m, std::cbrt(double(n_max + 1)));

    const int levels = n_max + 1;
    int size = std::max(config.initial_size, 2 * levels);

    OracleResult res;
    res.energies = eigen_lowest(build_hamiltonian(model, omega, size), levels);
    res.basis_used = size;
    res.per_level_error_estimate.assign(levels, std::numeric_limits<double>::infinity());

    for (int pass = 0; pass < config.max_doublings; ++pass) {
        size *= 2;
        std::vector<double> next = eigen_lowest(build_hamiltonian(model, omega, size), levels);
        bool ok = true;
        for (int i = 0; i < levels; ++i) {
            const double scale = std::max(std::fabs(next[i]), 1e-300);
            res.per_level_error_estimate[i] = std::fabs(next[i] - res.energies[i]) / scale;
            if (res.per_level_error_estimate[i] > config.rel_tol)
                ok = false;
        }
        res.energies = std::move(next);
        res.basis_used = size;
        if (ok) {
            res.converged = true;
            return res;
        }
    }

    std::ostringstream msg;
    msg << "exact_energies: not converged to rel_tol " << config.rel_tol
        << " after " << config.max_doublings << " doublings (basis " << size << ")";
    throw OracleNotConverged(msg.str(), res);
}

} // namespace anharm
