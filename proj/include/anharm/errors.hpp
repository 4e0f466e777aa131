#pragma once

#include <stdexcept>
#include <string>

namespace anharm {

// Thrown when a bracketing scan finds no root / stationary point.
// Carries the window that was searched.
class NoRootError : public std::runtime_error {
public:
    NoRootError(const std::string& what, double z_lo, double z_hi)
        : std::runtime_error(what + " (scanned z in [" + std::to_string(z_lo) +
                             ", " + std::to_string(z_hi) + "])"),
          z_lo_(z_lo), z_hi_(z_hi) {}

    double z_lo() const { return z_lo_; }
    double z_hi() const { return z_hi_; }

private:
    double z_lo_;
    double z_hi_;
};

// Thrown when an iterative solver exhausts its iteration budget.
class NoConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace anharm
