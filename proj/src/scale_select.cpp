#include "anharm/scale_select.hpp"

#include "anharm/hs_terms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace anharm {

namespace {

constexpr double kZRelTol = 1e-10;

using Fn = std::function<double(double)>;

void check_window(const ZSearchWindow& w) {
    if (!(w.z_lo > 0.0) || !(w.z_hi > w.z_lo))
        throw std::invalid_argument("scale_select: window must satisfy 0 < z_lo < z_hi");
    if (w.scan_points < 8)
        throw std::invalid_argument("scale_select: scan_points must be >= 8");
}

void check_order(int k) {
    if (k < 1 || k > 3)
        throw std::invalid_argument("scale_select: order k must be in [1, 3]");
}

std::vector<double> uniform_grid(const ZSearchWindow& w) {
    std::vector<double> z(w.scan_points);
    const double step = (w.z_hi - w.z_lo) / double(w.scan_points - 1);
    for (int i = 0; i < w.scan_points; ++i)
        z[i] = w.z_lo + step * double(i);
    z.back() = w.z_hi;
    return z;
}

std::vector<double> log_grid(const ZSearchWindow& w) {
    std::vector<double> z(w.scan_points);
    const double l0 = std::log(w.z_lo);
    const double step = (std::log(w.z_hi) - l0) / double(w.scan_points - 1);
    for (int i = 0; i < w.scan_points; ++i)
        z[i] = std::exp(l0 + step * double(i));
    z.back() = w.z_hi;
    return z;
}

double bisect_root(const Fn& f, double lo, double hi, double flo) {
    while (hi - lo > kZRelTol * hi) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double golden_min(const Fn& f, double a, double b) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > kZRelTol * b) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

std::vector<double> scan_roots(const Fn& f, const std::vector<double>& grid) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        v[i] = f(grid[i]);

    std::vector<double> roots;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (v[i] == 0.0)
            roots.push_back(grid[i]);
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (v[i - 1] != 0.0 && v[i] != 0.0 && (v[i - 1] < 0.0) != (v[i] < 0.0))
            roots.push_back(bisect_root(f, grid[i - 1], grid[i], v[i - 1]));
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<StationaryPoint> scan_stationary(const Fn& deriv, const Fn& value,
                                             const std::vector<double>& grid) {
    std::vector<StationaryPoint> pts;
    for (double z : scan_roots(deriv, grid)) {
        const double h = std::max(1e-6 * z, 1e-12);
        const double curv = (deriv(z + h) - deriv(z - h)) / (2.0 * h);
        StationaryPoint p;
        p.z = z;
        p.value = value(z);
        p.kind = curv >= 0.0 ? ExtremumKind::LocalMin : ExtremumKind::LocalMax;
        p.curvature_sign = curv >= 0.0 ? +1 : -1;
        pts.push_back(p);
    }
    return pts;
}

std::vector<StationaryPoint> scan_minima(const Fn& f, const std::vector<double>& grid) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        v[i] = f(grid[i]);

    std::vector<StationaryPoint> mins;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (v[i] < v[i - 1] && v[i] < v[i + 1]) {
            StationaryPoint p;
            p.z = golden_min(f, grid[i - 1], grid[i + 1]);
            p.value = f(p.z);
            p.kind = ExtremumKind::LocalMin;
            p.curvature_sign = +1;
            mins.push_back(p);
        }
    }
    return mins;
}

// Largest positive real root of u^3 + p u + q for cubics with exactly one
// positive root, by damped-free Newton from an upper starting point in the
// convex region.
double cubic_root_from_above(double p, double q, double u0) {
    double u = u0;
    for (int it = 0; it < 200; ++it) {
        const double f = (u * u + p) * u + q;
        const double fp = 3.0 * u * u + p;
        const double step = f / fp;
        u -= step;
        if (std::fabs(step) <= 1e-15 * std::fabs(u))
            break;
    }
    return u;
}

double fac_c_of(Level n) {
    const double dn = double(n.n);
    return (10.0 * dn * dn + 10.0 * dn + 1.0) / (4.0 * (2.0 * dn + 1.0));
}

double pms_d_of(Level n) {
    const double dn = double(n.n);
    return 3.0 * (2.0 * dn * dn + 2.0 * dn + 1.0) / (2.0 * (2.0 * dn + 1.0));
}

void cross_check_k1(double z_scanned, double z_closed, const char* who) {
    if (std::fabs(z_scanned - z_closed) > 1e-6 * z_closed)
        throw NoConvergenceError(std::string(who) +
                                 ": scanned k=1 root disagrees with the closed cubic");
}

double spread_over(const Fn& f, const std::vector<StationaryPoint>& minima) {
    const double z_left = minima.front().z;
    const double z_right = minima.back().z;

    ZSearchWindow span{z_left, z_right, 4000};
    const std::vector<double> grid = log_grid(span);
    std::size_t imax = 0;
    double vmax = f(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double v = f(grid[i]);
        if (v > vmax) {
            vmax = v;
            imax = i;
        }
    }
    if (imax > 0 && imax + 1 < grid.size()) {
        const Fn neg = [&f](double z) { return -f(z); };
        const double zmax = golden_min(neg, grid[imax - 1], grid[imax + 1]);
        vmax = std::max(vmax, f(zmax));
    }

    double vmin = minima.front().value;
    for (const StationaryPoint& p : minima)
        vmin = std::min(vmin, p.value);
    return vmax - vmin;
}

Fn spread_objective_fn(Level n, const OscillatorModel& model, SpreadObjective objective) {
    if (objective == SpreadObjective::K3PartialSum)
        return [n, model](double z) { return partial_sum(n, z, model, 3); };
    return [n, model](double z) { return h_expect_1(n, z, model); };
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
    case Method::FAC: return "fac";
    case Method::PMS: return "pms";
    case Method::VAR0: return "var0";
    case Method::VAR1: return "var1";
    }
    return "?";
}

const char* rule_name(SelectionRule r) {
    switch (r) {
    case SelectionRule::UniquePoint: return "unique-point";
    case SelectionRule::SmallestRoot: return "smallest-root";
    case SelectionRule::LeftLocalMin: return "left-local-min";
    case SelectionRule::GlobalMin: return "global-min";
    }
    return "?";
}

SelectionResult fac_select(Level n, const OscillatorModel& model, int k,
                           const ZSearchWindow& search) {
    check_window(search);
    check_order(k);

    const Fn corr = [n, model, k](double z) {
        return partial_sum(n, z, model, k) - e0(n, z);
    };
    const std::vector<double> roots = scan_roots(corr, uniform_grid(search));
    if (roots.empty())
        throw NoRootError("fac_select: correction sum has no root", search.z_lo, search.z_hi);

    SelectionResult r;
    r.method = Method::FAC;
    r.order = k;
    r.roots = roots;
    r.z_chosen = roots.front();
    r.energy = partial_sum(n, r.z_chosen, model, k);
    r.rule_applied = SelectionRule::SmallestRoot;

    if (k == 1)
        cross_check_k1(r.z_chosen, fac_z1_closed(n, model.g), "fac_select");
    return r;
}

SelectionResult fac_select(Level n, const OscillatorModel& model, int k) {
    return fac_select(n, model, k, ZSearchWindow::default_for(n));
}

SelectionResult pms_select(Level n, const OscillatorModel& model, int k,
                           const ZSearchWindow& search) {
    check_window(search);
    check_order(k);

    const Fn deriv = [n, model, k](double z) { return partial_sum_dz(n, z, model, k); };
    const Fn value = [n, model, k](double z) { return partial_sum(n, z, model, k); };
    const std::vector<StationaryPoint> pts = scan_stationary(deriv, value, uniform_grid(search));
    if (pts.empty())
        throw NoRootError("pms_select: no stationary point", search.z_lo, search.z_hi);

    SelectionResult r;
    r.method = Method::PMS;
    r.order = k;
    r.stationary = pts;

    const StationaryPoint* chosen = nullptr;
    for (const StationaryPoint& p : pts) {
        if (p.kind == ExtremumKind::LocalMin) {
            chosen = &p;
            break;
        }
    }
    if (!chosen)
        throw NoRootError("pms_select: no local minimum among stationary points",
                          search.z_lo, search.z_hi);

    r.z_chosen = chosen->z;
    r.energy = chosen->value;
    r.rule_applied = (pts.size() == 1) ? SelectionRule::UniquePoint
                                       : SelectionRule::LeftLocalMin;

    if (k == 1)
        cross_check_k1(r.z_chosen, pms_z1_closed(n, model.g), "pms_select");
    return r;
}

SelectionResult pms_select(Level n, const OscillatorModel& model, int k) {
    return pms_select(n, model, k, ZSearchWindow::default_for(n));
}

SelectionResult variational_select(Level n, const OscillatorModel& model, int level,
                                   const ZSearchWindow& search) {
    check_window(search);
    if (level != 0 && level != 1)
        throw std::invalid_argument("variational_select: level must be 0 or 1");

    const Fn objective = (level == 0)
        ? Fn([n, model](double z) { return h_expect_0(n, z, model); })
        : Fn([n, model](double z) { return h_expect_1(n, z, model); });

    const std::vector<StationaryPoint> minima = scan_minima(objective, uniform_grid(search));
    if (minima.empty())
        throw NoRootError("variational_select: no local minimum", search.z_lo, search.z_hi);

    SelectionResult r;
    r.method = (level == 0) ? Method::VAR0 : Method::VAR1;
    r.order = level;
    r.stationary = minima;

    if (n.n <= 1) {
        const StationaryPoint* best = &minima.front();
        for (const StationaryPoint& p : minima)
            if (p.value < best->value)
                best = &p;
        r.z_chosen = best->z;
        r.energy = best->value;
        r.rule_applied = SelectionRule::GlobalMin;
    } else {
        r.z_chosen = minima.front().z;
        r.energy = minima.front().value;
        r.rule_applied = SelectionRule::LeftLocalMin;
        if (minima.size() >= 2)
            r.min_to_min_spread = spread_over(objective, minima);
    }
    return r;
}

SelectionResult variational_select(Level n, const OscillatorModel& model, int level) {
    return variational_select(n, model, level, ZSearchWindow::default_for(n));
}

std::vector<StationaryPoint> objective_minima(Level n, const OscillatorModel& model,
                                              SpreadObjective objective) {
    const Fn f = spread_objective_fn(n, model, objective);

    ZSearchWindow w = ZSearchWindow::default_for(n);
    w.scan_points = 4000;
    for (;;) {
        std::vector<StationaryPoint> minima = scan_minima(f, log_grid(w));
        if (minima.size() >= 2)
            return minima;
        if (w.z_hi >= 1e6)
            throw NoRootError("objective_minima: fewer than two local minima",
                              w.z_lo, w.z_hi);
        w.z_hi *= 4.0;
    }
}

double spread(Level n, const OscillatorModel& model, SpreadObjective objective,
              const ZSearchWindow& search) {
    check_window(search);
    const Fn f = spread_objective_fn(n, model, objective);
    const std::vector<StationaryPoint> minima = scan_minima(f, log_grid(search));
    if (minima.size() < 2)
        throw NoRootError("spread: fewer than two local minima", search.z_lo, search.z_hi);
    return spread_over(f, minima);
}

double spread(Level n, const OscillatorModel& model, SpreadObjective objective) {
    const Fn f = spread_objective_fn(n, model, objective);
    return spread_over(f, objective_minima(n, model, objective));
}

AsymptoticReport asymptotic_checks() {
    AsymptoticReport r;
    r.n_used = 1000;
    r.fac_coeff = std::pow(0.8, 2.0 / 3.0);
    r.pms_coeff = std::pow(3.0, 4.0 / 3.0) / std::pow(2.0, 7.0 / 3.0);

    const Level n(r.n_used);
    const double nh = double(r.n_used) + 0.5;
    const double scale = std::pow(nh, 4.0 / 3.0);
    r.fac_energy_ratio = fac_e1_closed(n) / (r.fac_coeff * scale);
    r.pms_energy_ratio = pms_e1_closed(n) / (r.pms_coeff * scale);
    r.fac_z_ratio = fac_z1_closed(n, 0.0) / (1.25 * nh);
    r.pms_z_ratio = pms_z1_closed(n, 0.0) / (1.5 * nh);
    return r;
}

double fac_z1_closed(Level n, double g) {
    if (!(g >= 0.0))
        throw std::domain_error("fac_z1_closed: g must be >= 0");
    const double c = fac_c_of(n);
    const double u = cubic_root_from_above(g, -c, std::cbrt(c));
    return u * u * u;
}

double pms_z1_closed(Level n, double g) {
    if (!(g >= 0.0))
        throw std::domain_error("pms_z1_closed: g must be >= 0");
    const double d = pms_d_of(n);
    const double u = cubic_root_from_above(-g, -d, std::cbrt(d) + std::sqrt(g));
    return u * u * u;
}

double fac_e1_closed(Level n) {
    const double dn = double(n.n);
    const double nh = dn + 0.5;
    return std::pow(0.8, 2.0 / 3.0)
         * std::pow(nh * nh * nh * nh / (dn * dn + dn + 0.1), 2.0 / 3.0);
}

double pms_e1_closed(Level n) {
    const double dn = double(n.n);
    const double nh = dn + 0.5;
    return std::pow(3.0, 4.0 / 3.0) / std::pow(2.0, 7.0 / 3.0)
         * std::cbrt(nh * nh * (dn * dn + dn + 0.5));
}

} // namespace anharm
