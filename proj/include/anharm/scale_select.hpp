#pragma once

#include "anharm/errors.hpp"
#include "anharm/model.hpp"

#include <optional>
#include <vector>

namespace anharm {

struct ZSearchWindow {
    double z_lo = 0.02;
    double z_hi = 10.0;
    int scan_points = 2000;

    static ZSearchWindow default_for(Level n) {
        return ZSearchWindow{0.02, 10.0 * double(n.n + 1), 2000};
    }
};

enum class Method { FAC, PMS, VAR0, VAR1 };
enum class SelectionRule { UniquePoint, SmallestRoot, LeftLocalMin, GlobalMin };
enum class ExtremumKind { LocalMin, LocalMax };

const char* method_name(Method m);
const char* rule_name(SelectionRule r);

struct StationaryPoint {
    double z = 0.0;
    double value = 0.0;
    ExtremumKind kind = ExtremumKind::LocalMin;
    int curvature_sign = +1;
};

struct SelectionResult {
    Method method = Method::FAC;
    int order = 0;
    double z_chosen = 0.0;
    std::vector<double> roots;               // FAC candidates
    std::vector<StationaryPoint> stationary; // PMS and variational candidates
    double energy = 0.0;
    SelectionRule rule_applied = SelectionRule::SmallestRoot;
    std::optional<double> min_to_min_spread; // variational, n >= 2, two minima
};

// Roots of sum_{j=1..k} E^(j)(Z) = 0; smallest positive root wins. k = 1 is
// cross-checked against the closed cubic in u = Z^{1/3}.
SelectionResult fac_select(Level n, const OscillatorModel& model, int k,
                           const ZSearchWindow& search);
SelectionResult fac_select(Level n, const OscillatorModel& model, int k);

// Stationary points of the order-k partial sum; left local minimum wins
// (the k = 1 point is unique). k = 1 cross-checked against its closed cubic.
SelectionResult pms_select(Level n, const OscillatorModel& model, int k,
                           const ZSearchWindow& search);
SelectionResult pms_select(Level n, const OscillatorModel& model, int k);

// Minima of <H> in the trial state: level 0 uses the first-order state
// (objective h_expect_0), level 1 the resummed h_expect_1. Global minimum for
// n <= 1, left local minimum for n >= 2 (the flat-region rule); for n >= 2
// with two or more minima the min-to-min spread is reported as well.
SelectionResult variational_select(Level n, const OscillatorModel& model, int level,
                                   const ZSearchWindow& search);
SelectionResult variational_select(Level n, const OscillatorModel& model, int level);

enum class SpreadObjective { K3PartialSum, HExpect1 };

// All local minima of the chosen objective, scanned log-spaced over a window
// that auto-extends to the right until the outermost minimum is bracketed
// (the k = 3 right minima sit far outside the default selection window).
std::vector<StationaryPoint> objective_minima(Level n, const OscillatorModel& model,
                                              SpreadObjective objective);

// max - min of the objective over the closed interval between its two
// outermost local minima.
double spread(Level n, const OscillatorModel& model, SpreadObjective objective,
              const ZSearchWindow& search);
double spread(Level n, const OscillatorModel& model, SpreadObjective objective);

struct AsymptoticReport {
    double fac_coeff = 0.0;        // (4/5)^{2/3}
    double pms_coeff = 0.0;        // 3^{4/3} / 2^{7/3}
    double fac_energy_ratio = 0.0; // closed-form k=1 energy over coeff*(n+1/2)^{4/3}
    double pms_energy_ratio = 0.0;
    double fac_z_ratio = 0.0;      // closed-form k=1 root over (5/4)(n+1/2)
    double pms_z_ratio = 0.0;      // closed-form k=1 root over (3/2)(n+1/2)
    int n_used = 0;
};

AsymptoticReport asymptotic_checks();

// Closed k = 1 forms. The roots solve cubics in u = Z^{1/3}:
//   FAC: u^3 + g u = (10n^2+10n+1)/(4(2n+1))
//   PMS: u^3 - g u = 3(2n^2+2n+1)/(2(2n+1))
// Energies are the g = 0 specializations.
double fac_z1_closed(Level n, double g);
double pms_z1_closed(Level n, double g);
double fac_e1_closed(Level n);
double pms_e1_closed(Level n);

} // namespace anharm
