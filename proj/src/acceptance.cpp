#include "anharm/acceptance.hpp"

#include "anharm/hs_reference.hpp"
#include "anharm/hs_terms.hpp"
#include "anharm/model.hpp"
#include "anharm/oracle.hpp"
#include "anharm/rs_series.hpp"
#include "anharm/scale_select.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>

namespace anharm {

namespace {

std::string strf(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return std::string(buf);
}

double uniform01(std::mt19937& rng) {
    // Hand-rolled so the draw sequence is identical on every platform.
    return double(rng()) / 4294967296.0;
}

CriterionResult run_guarded(int id, const std::string& name,
                            const std::function<CriterionResult()>& body) {
    try {
        CriterionResult r = body();
        r.id = id;
        r.name = name;
        return r;
    } catch (const std::exception& e) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
        return r;
    }
}

//==============================================================
// Individual criteria. Tolerances are fixed here, not options.
//==============================================================

CriterionResult variational_ratios(const OscillatorModel& m, const OracleResult& ex) {
    const double r0 = variational_select(Level(0), m, 1).energy / ex.energies[0];
    const double r1 = variational_select(Level(1), m, 1).energy / ex.energies[1];
    CriterionResult r;
    r.passed = std::fabs(r0 - 1.00076) <= 5e-4 && std::fabs(r1 - 1.00066) <= 5e-4;
    r.detail = strf("ratios %.6f, %.6f vs targets 1.00076, 1.00066 (tol 5e-4)", r0, r1);
    return r;
}

CriterionResult fac_first_order(const OscillatorModel& m, const OracleResult& ex) {
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
        const double ratio = fac_select(Level(n), m, 1).energy / ex.energies[n];
        worst = std::max(worst, std::fabs(ratio - 1.0));
    }
    CriterionResult r;
    r.passed = worst < 0.01;
    r.detail = strf("max |ratio-1| = %.5f over n=2..5 (tol 0.01)", worst);
    return r;
}

CriterionResult pms_third_order(const OscillatorModel& m, const OracleResult& ex) {
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
        const double ratio = pms_select(Level(n), m, 3).energy / ex.energies[n];
        worst = std::max(worst, std::fabs(ratio - 1.0));
    }
    CriterionResult r;
    r.passed = worst < 0.01;
    r.detail = strf("max |ratio-1| = %.5f over n=0..5 (tol 0.01)", worst);
    return r;
}

CriterionResult asymptotic_constants() {
    const AsymptoticReport rep = asymptotic_checks();
    const bool coeffs_ok = std::fabs(rep.fac_coeff - 0.862) <= 5e-4 &&
                           std::fabs(rep.pms_coeff - 0.859) <= 5e-4;
    const bool energy_ok = std::fabs(rep.fac_energy_ratio - 1.0) <= 1e-3 &&
                           std::fabs(rep.pms_energy_ratio - 1.0) <= 1e-3;
    CriterionResult r;
    r.passed = coeffs_ok && energy_ok;
    r.detail = strf("coeffs %.6f/%.6f vs 0.862/0.859 (tol 5e-4); "
                    "n=%d energy ratios %.8f/%.8f (tol 1e-3)",
                    rep.fac_coeff, rep.pms_coeff, rep.n_used,
                    rep.fac_energy_ratio, rep.pms_energy_ratio);
    return r;
}

CriterionResult z_scaling() {
    const Level n(100);
    const double nh = 100.5;
    const double rf = fac_z1_closed(n, 0.0) / (1.25 * nh);
    const double rp = pms_z1_closed(n, 0.0) / (1.5 * nh);
    CriterionResult r;
    r.passed = std::fabs(rf - 1.0) < 0.01 && std::fabs(rp - 1.0) < 0.01;
    r.detail = strf("n=100 root ratios %.6f (to 5/4(n+1/2)), %.6f (to 3/2(n+1/2)), tol 1%%",
                    rf, rp);
    return r;
}

CriterionResult negativity_repair(const OscillatorModel& m) {
    double worst_min = -1e300;  // most positive right-minimum seen
    double worst_h1 = 1e300;    // most negative resummed value seen
    for (int n = 2; n <= 5; ++n) {
        const Level lvl(n);
        const std::vector<StationaryPoint> mins =
            objective_minima(lvl, m, SpreadObjective::K3PartialSum);
        worst_min = std::max(worst_min, mins.back().value);

        const double z_hi = 2.0 * mins.back().z;
        const double l0 = std::log(0.02);
        const double step = (std::log(z_hi) - l0) / 3999.0;
        for (int i = 0; i < 4000; ++i)
            worst_h1 = std::min(worst_h1, h_expect_1(lvl, std::exp(l0 + step * i), m));
    }
    CriterionResult r;
    r.passed = worst_min < 0.0 && worst_h1 > 0.0;
    r.detail = strf("largest k=3 right-local-min %.4f (< 0), smallest resummed value %.4f (> 0)",
                    worst_min, worst_h1);
    return r;
}

CriterionResult spread_reduction(const OscillatorModel& m) {
    bool ok = true;
    double worst_ratio = 0.0;
    for (int n = 0; n <= 5; ++n) {
        const double s3 = spread(Level(n), m, SpreadObjective::K3PartialSum);
        const double s1 = spread(Level(n), m, SpreadObjective::HExpect1);
        ok = ok && s1 < s3;
        worst_ratio = std::max(worst_ratio, s1 / s3);
    }
    CriterionResult r;
    r.passed = ok;
    r.detail = strf("max resummed/k3 spread ratio %.4f over n=0..5 (must be < 1)", worst_ratio);
    return r;
}

CriterionResult oracle_cross_checks() {
    // (a) harmonic limit
    const SymMatrix hh = build_hamiltonian(1.0, 0.0, 1.0, 64);
    const std::vector<double> ev = eigen_lowest(hh, 8);
    double da = 0.0;
    for (int i = 0; i < 8; ++i)
        da = std::max(da, std::fabs(ev[i] - (double(i) + 0.5)));

    // (b) basis-frequency independence at g = 0
    const OscillatorModel m0(0.0);
    OracleConfig cfg;
    double db = 0.0;
    std::vector<std::vector<double>> runs;
    for (double w : {0.5, 1.0, 2.0}) {
        cfg.basis_omega = w;
        runs.push_back(exact_energies(m0, 5, cfg).energies);
    }
    for (std::size_t i = 1; i < runs.size(); ++i)
        for (int n = 0; n <= 5; ++n)
            db = std::max(db, std::fabs(runs[i][n] / runs[0][n] - 1.0));

    // (c) weak-coupling series vs oracle at lambda = 0.01. The truncation
    // remainder is the dropped fourth-order term, whose coefficient grows
    // roughly like (n+1)^5 (-0.94, -15.8, -108, -460 for n = 0..3), so the
    // bound carries that factor.
    const double lambda = 0.01;
    const OscillatorModel mw = OscillatorModel::from_lambda(lambda);
    const OracleResult ow = exact_energies(mw, 3);
    double dc = 0.0; // worst gap over its per-level bound
    for (int n = 0; n <= 3; ++n) {
        const double series = rs_partial_sum(Level(n), lambda, 3);
        const double exact = ow.energies[n] * std::cbrt(lambda); // units of m
        const double bound = 2.0 * std::pow(n + 1.0, 5.0) * std::pow(lambda, 4.0);
        dc = std::max(dc, std::fabs(series - exact) / bound);
    }

    // (d) pure-quartic level scaling ~ (n+1/2)^{4/3}
    const OracleResult o40 = exact_energies(m0, 40);
    const double ratio = o40.energies[40] / o40.energies[20];
    const double dd = std::fabs(ratio / std::pow(40.5 / 20.5, 4.0 / 3.0) - 1.0);

    CriterionResult r;
    r.passed = da <= 1e-12 && db <= 1e-9 && dc <= 1.0 && dd <= 0.02;
    r.detail = strf("harmonic dev %.1e (tol 1e-12); omega-independence %.1e (tol 1e-9); "
                    "series gap %.2f of its truncation bound (tol 1); "
                    "scaling dev %.4f (tol 0.02)",
                    da, db, dc, dd);
    return r;
}

CriterionResult perturbation_sum_equivalence() {
    std::mt19937 rng(12345u);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int n = int(uniform01(rng) * 6.0);
        const double z = 0.1 * std::exp(uniform01(rng) * std::log(100.0));
        const double x = 2.0 * uniform01(rng);
        const Level lvl(n);
        const ReferenceTerms ref = reference_terms(lvl, z, x);
        const double d1 = std::fabs(e1(lvl, z, x) - ref.e1) / std::max(std::fabs(ref.e1), 1e-12);
        const double d2 = std::fabs(e2(lvl, z, x) - ref.e2) / std::max(std::fabs(ref.e2), 1e-12);
        const double d3 = std::fabs(e3(lvl, z, x) - ref.e3) / std::max(std::fabs(ref.e3), 1e-12);
        worst = std::max({worst, d1, d2, d3});
    }
    CriterionResult r;
    r.passed = worst <= 1e-8;
    r.detail = strf("max relative deviation %.2e over 20 random (n,z,x) points (tol 1e-8)", worst);
    return r;
}

CriterionResult variational_lower_bound(const OscillatorModel& m, const OracleResult& ex) {
    double worst = 1e300;
    for (int n = 0; n <= 1; ++n) {
        const Level lvl(n);
        for (int i = 0; i < 400; ++i) {
            const double z = 0.05 + (10.0 - 0.05) * double(i) / 399.0;
            worst = std::min(worst, h_expect_1(lvl, z, m) - ex.energies[n]);
        }
    }
    CriterionResult r;
    r.passed = worst >= -1e-9;
    r.detail = strf("min (value - exact) = %.3e over 400-point grids, n=0,1 (tol -1e-9)", worst);
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
    const OscillatorModel m0(0.0);
    OracleResult ex;
    std::string oracle_err;
    try {
        ex = exact_energies(m0, 5);
    } catch (const std::exception& e) {
        oracle_err = e.what();
    }

    // Criteria 1-3 and 10 compare against the reference energies; if the
    // oracle itself failed they are reported as failed with its message.
    auto needs_oracle = [&](const std::function<CriterionResult()>& body) {
        return [&, body]() -> CriterionResult {
            if (!oracle_err.empty())
                throw NoConvergenceError("reference oracle failed: " + oracle_err);
            return body();
        };
    };

    std::vector<CriterionResult> out;
    out.push_back(run_guarded(1, "variational-ratios",
                              needs_oracle([&] { return variational_ratios(m0, ex); })));
    out.push_back(run_guarded(2, "fac-first-order-accuracy",
                              needs_oracle([&] { return fac_first_order(m0, ex); })));
    out.push_back(run_guarded(3, "pms-third-order-accuracy",
                              needs_oracle([&] { return pms_third_order(m0, ex); })));
    out.push_back(run_guarded(4, "asymptotic-constants", asymptotic_constants));
    out.push_back(run_guarded(5, "z-scaling", z_scaling));
    out.push_back(run_guarded(6, "negativity-repair", [&] { return negativity_repair(m0); }));
    out.push_back(run_guarded(7, "spread-reduction", [&] { return spread_reduction(m0); }));
    out.push_back(run_guarded(8, "oracle-cross-checks", oracle_cross_checks));
    out.push_back(run_guarded(9, "perturbation-sum-equivalence", perturbation_sum_equivalence));
    out.push_back(run_guarded(10, "variational-lower-bound",
                              needs_oracle([&] { return variational_lower_bound(m0, ex); })));
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.passed)
            return false;
    return true;
}

} // namespace anharm
