#pragma once

#include "anharm/errors.hpp"
#include "anharm/model.hpp"

#include <vector>

namespace anharm {

struct SymMatrix {
    int n = 0;
    std::vector<double> a; // dense row-major, kept symmetric

    explicit SymMatrix(int size) : n(size), a(std::size_t(size) * size, 0.0) {}

    double& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    double at(int i, int j) const { return a[std::size_t(i) * n + j]; }
    void set_sym(int i, int j, double v) { at(i, j) = v; at(j, i) = v; }
};

struct OracleConfig {
    double basis_omega = 0.0; // <= 0 selects the max(m, (n_max+1)^{1/3}) heuristic
    int initial_size = 64;
    double rel_tol = 1e-10;
    int max_doublings = 6;
};

struct OracleResult {
    std::vector<double> energies; // units of M
    int basis_used = 0;
    bool converged = false;
    std::vector<double> per_level_error_estimate;
};

class OracleNotConverged : public NoConvergenceError {
public:
    OracleNotConverged(const std::string& what, OracleResult partial)
        : NoConvergenceError(what), partial_(std::move(partial)) {}
    const OracleResult& partial() const { return partial_; }

private:
    OracleResult partial_;
};

// H = p^2/2 + msq q^2/2 + quartic q^4 in the number basis of a frequency-omega
// oscillator. Entries vanish for |i-j| not in {0,2,4}.
SymMatrix build_hamiltonian(double msq, double quartic, double omega, int size);

// Model form in M = 1 units: msq = g, quartic coefficient 1/4.
SymMatrix build_hamiltonian(const OscillatorModel& model, double omega, int size);

// Lowest `count` eigenvalues, ascending. Even/odd index blocks are split when
// the matrix couples only same-parity indices.
std::vector<double> eigen_lowest(const SymMatrix& h, int count);

// Doubles the basis until the first n_max+1 eigenvalues are stable to
// config.rel_tol between successive sizes.
OracleResult exact_energies(const OscillatorModel& model, int n_max,
                            const OracleConfig& config = OracleConfig{});

} // namespace anharm
