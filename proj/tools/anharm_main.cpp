#include "anharm/acceptance.hpp"
#include "anharm/errors.hpp"
#include "anharm/hs_terms.hpp"
#include "anharm/model.hpp"
#include "anharm/oracle.hpp"
#include "anharm/scale_select.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace anharm;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//==============================================================
// Output: one row model feeding both CSV and JSON writers.
// Numbers are fixed at 12 significant digits, lowercase
// scientific, so identical invocations are byte-identical.
//==============================================================

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

struct Cell {
    std::string text;
    bool quoted = false; // JSON string / CSV escaped
};

Cell ncell(double v) { return {num(v), false}; }
Cell icell(long long v) { return {std::to_string(v), false}; }
Cell scell(std::string s) { return {std::move(s), true}; }
Cell bcell(bool v) { return {v ? "true" : "false", false}; }
Cell null_cell() { return {"null", false}; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

void emit(const std::string& format, const std::vector<std::string>& cols,
          const std::vector<std::vector<Cell>>& rows) {
    if (format == "json") {
        std::printf("[");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::printf("%s{", r == 0 ? "\n" : ",\n");
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const Cell& cell = rows[r][c];
                std::printf("%s\"%s\": %s", c == 0 ? "" : ", ", cols[c].c_str(),
                            cell.quoted ? json_escape(cell.text).c_str() : cell.text.c_str());
            }
            std::printf("}");
        }
        std::printf("\n]\n");
        return;
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
        std::printf("%s%s", c == 0 ? "" : ",", cols[c].c_str());
    std::printf("\n");
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Cell& cell = row[c];
            std::string text = cell.text == "null" && !cell.quoted ? "" : cell.text;
            if (cell.quoted)
                text = csv_escape(text);
            std::printf("%s%s", c == 0 ? "" : ",", text.c_str());
        }
        std::printf("\n");
    }
}

//==============================================================
// Argument helpers
//==============================================================

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = std::min(s.find(',', pos), s.size());
        const std::string item = s.substr(pos, comma - pos);
        if (item.empty())
            throw UsageError("empty entry in level list '" + s + "'");
        const std::size_t dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, dots));
                const int hi = std::stoi(item.substr(dots + 2));
                if (hi < lo)
                    throw UsageError("descending range '" + item + "'");
                for (int n = lo; n <= hi; ++n)
                    out.push_back(n);
            }
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad level entry '" + item + "'");
        }
        pos = comma + 1;
    }
    for (int n : out)
        if (n < 0)
            throw UsageError("levels must be >= 0");
    return out;
}

struct ZRange {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
};

ZRange parse_z_range(const std::string& s) {
    ZRange r;
    const std::size_t c1 = s.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw UsageError("range must be min:max:steps, got '" + s + "'");
    try {
        r.lo = std::stod(s.substr(0, c1));
        r.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
        r.steps = std::stoi(s.substr(c2 + 1));
    } catch (const std::exception&) {
        throw UsageError("bad range '" + s + "'");
    }
    if (!(r.lo > 0.0) || !(r.hi > r.lo))
        throw UsageError("range needs 0 < min < max");
    if (r.steps < 2)
        throw UsageError("range needs steps >= 2");
    return r;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = std::min(s.find(',', pos), s.size());
        out.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

double eval_tag(const std::string& tag, Level n, double z, const OscillatorModel& m) {
    if (tag == "k0" || tag == "k1" || tag == "k2" || tag == "k3")
        return partial_sum(n, z, m, tag[1] - '0');
    if (tag == "h0")
        return h_expect_0(n, z, m);
    if (tag == "h1")
        return h_expect_1(n, z, m);
    throw UsageError("unknown tag '" + tag + "' (expected k0..k3, h0, h1)");
}

std::string candidates_text(const SelectionResult& sr) {
    std::string out;
    for (double z : sr.roots) {
        if (!out.empty())
            out += ';';
        out += num(z);
    }
    for (const StationaryPoint& p : sr.stationary) {
        if (!out.empty())
            out += ';';
        out += num(p.z);
        out += (p.kind == ExtremumKind::LocalMin) ? "(min)" : "(max)";
    }
    return out;
}

//==============================================================
// Subcommands
//==============================================================

struct CommonArgs {
    std::string format = "csv";
};

int cmd_zsweep(const CommonArgs& common, const std::string& n_list, double g,
               const std::string& z_range, const std::string& tag_list, bool with_exact) {
    const std::vector<int> ns = parse_n_list(n_list);
    const ZRange zr = parse_z_range(z_range);
    const std::vector<std::string> tags = split_csv_list(tag_list);
    const OscillatorModel model(g);
    for (const std::string& tag : tags)
        eval_tag(tag, Level(ns.front()), 1.0, model); // validates tag names up front

    std::map<int, double> exact;
    if (with_exact) {
        const int n_max = *std::max_element(ns.begin(), ns.end());
        const OracleResult ex = exact_energies(model, n_max);
        for (int n : ns)
            exact[n] = ex.energies[n];
    }

    const std::vector<std::string> cols = {"n", "g", "z", "tag", "value", "exact"};
    std::vector<std::vector<Cell>> rows;
    for (int n : ns) {
        const Level lvl(n);
        for (const std::string& tag : tags) {
            for (int i = 0; i < zr.steps; ++i) {
                const double z = zr.lo + (zr.hi - zr.lo) * double(i) / double(zr.steps - 1);
                rows.push_back({icell(n), ncell(g), ncell(z), scell(tag),
                                ncell(eval_tag(tag, lvl, z, model)),
                                with_exact ? ncell(exact.at(n)) : null_cell()});
            }
        }
    }
    emit(common.format, cols, rows);
    return 0;
}

int cmd_select(const CommonArgs& common, const std::string& method,
               const std::string& n_list, double g, const std::string& orders_list,
               bool orders_given, bool strict) {
    const std::vector<int> ns = parse_n_list(n_list);
    const bool is_var = method == "var0" || method == "var1";
    if (is_var && orders_given)
        throw UsageError("--orders does not apply to variational selection");

    std::vector<int> orders;
    if (is_var) {
        orders = {method == "var0" ? 0 : 1};
    } else {
        for (int k : parse_n_list(orders_list)) {
            if (k < 1 || k > 3)
                throw UsageError("orders must be in 1..3");
            orders.push_back(k);
        }
    }

    const OscillatorModel model(g);
    const int n_max = *std::max_element(ns.begin(), ns.end());
    const OracleResult ex = exact_energies(model, n_max);

    const std::vector<std::string> cols = {"n", "g", "method", "order", "z", "energy",
                                           "exact", "ratio", "rule", "candidates", "status"};
    std::vector<std::vector<Cell>> rows;
    for (int n : ns) {
        const Level lvl(n);
        for (int k : orders) {
            std::vector<Cell> row = {icell(n), ncell(g), scell(method), icell(k)};
            try {
                SelectionResult sr;
                if (method == "fac")
                    sr = fac_select(lvl, model, k);
                else if (method == "pms")
                    sr = pms_select(lvl, model, k);
                else
                    sr = variational_select(lvl, model, k);
                row.push_back(ncell(sr.z_chosen));
                row.push_back(ncell(sr.energy));
                row.push_back(ncell(ex.energies[n]));
                row.push_back(ncell(sr.energy / ex.energies[n]));
                row.push_back(scell(rule_name(sr.rule_applied)));
                row.push_back(scell(candidates_text(sr)));
                row.push_back(scell("ok"));
            } catch (const NoRootError& e) {
                if (strict)
                    throw;
                row.insert(row.end(), {null_cell(), null_cell(), ncell(ex.energies[n]),
                                       null_cell(), null_cell(), null_cell(),
                                       scell(std::string("error: ") + e.what())});
            }
            rows.push_back(std::move(row));
        }
    }
    emit(common.format, cols, rows);
    return 0;
}

int cmd_exact(const CommonArgs& common, double g, int levels, double tol) {
    if (levels < 1)
        throw UsageError("--levels must be >= 1");
    if (!(tol > 0.0))
        throw UsageError("--tol must be > 0");

    const OscillatorModel model(g);
    OracleConfig cfg;
    cfg.rel_tol = tol;

    OracleResult res;
    bool converged_ok = true;
    try {
        res = exact_energies(model, levels - 1, cfg);
    } catch (const OracleNotConverged& e) {
        res = e.partial();
        converged_ok = false;
        std::fprintf(stderr, "%s\n", e.what());
    }

    const std::vector<std::string> cols = {"n", "g", "energy", "error_estimate",
                                           "basis", "converged"};
    std::vector<std::vector<Cell>> rows;
    for (std::size_t n = 0; n < res.energies.size(); ++n)
        rows.push_back({icell(long(n)), ncell(g), ncell(res.energies[n]),
                        ncell(res.per_level_error_estimate[n]), icell(res.basis_used),
                        bcell(res.converged)});
    emit(common.format, cols, rows);
    return converged_ok ? 0 : 2;
}

int cmd_spread(const CommonArgs& common, const std::string& n_list, double g) {
    const std::vector<int> ns = parse_n_list(n_list);
    const OscillatorModel model(g);

    const std::vector<std::string> cols = {"n", "g", "spread_k3", "spread_h1", "ratio"};
    std::vector<std::vector<Cell>> rows;
    for (int n : ns) {
        const Level lvl(n);
        const double s3 = spread(lvl, model, SpreadObjective::K3PartialSum);
        const double s1 = spread(lvl, model, SpreadObjective::HExpect1);
        rows.push_back({icell(n), ncell(g), ncell(s3), ncell(s1), ncell(s1 / s3)});
    }
    emit(common.format, cols, rows);
    return 0;
}

int cmd_report() {
    const std::vector<CriterionResult> results = run_acceptance();
    int passed = 0;
    for (const CriterionResult& r : results) {
        std::printf("%s %2d %s: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        if (r.passed)
            ++passed;
    }
    std::printf("SUMMARY: %d/%zu passed\n", passed, results.size());
    return passed == int(results.size()) ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quartic oscillator energies from a regulated perturbation "
                 "expansion, with scale selection, an exact diagonalization "
                 "reference, and figure/table data export"};
    app.require_subcommand(1);
    app.fallthrough(true);

    CommonArgs common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::string n_list = "0";
    double g = 0.0;
    std::string z_range = "0.05:8:400";
    std::string tags = "k0,k1,k2,k3";
    bool with_exact = false;
    CLI::App* zsweep = app.add_subcommand(
        "zsweep", "sample partial sums / expectation values over a z grid");
    zsweep->add_option("--n", n_list, "levels, e.g. 0 or 0,2 or 0..5")->capture_default_str();
    zsweep->add_option("--g", g, "quadratic coupling (m/M)^2, >= 0")->capture_default_str();
    zsweep->add_option("--z", z_range, "z grid as min:max:steps")->capture_default_str();
    zsweep->add_option("--tags", tags, "curves: k0..k3 partial sums, h0/h1 expectations")
        ->capture_default_str();
    zsweep->add_flag("--exact", with_exact, "append the diagonalization reference column");

    std::string method;
    std::string orders = "1,2,3";
    bool strict = false;
    CLI::App* select = app.add_subcommand("select", "choose z per level and method");
    select->add_option("--method", method, "fac, pms, var0, or var1")
        ->required()
        ->check(CLI::IsMember({"fac", "pms", "var0", "var1"}));
    CLI::Option* orders_opt =
        select->add_option("--orders", orders, "orders for fac/pms, e.g. 1,3 or 1..3")
            ->capture_default_str();
    select->add_option("--n", n_list, "levels")->capture_default_str();
    select->add_option("--g", g, "quadratic coupling")->capture_default_str();
    select->add_flag("--strict", strict, "exit nonzero when a selection fails");

    int levels = 6;
    double tol = 1e-10;
    CLI::App* exact = app.add_subcommand("exact", "diagonalization reference energies");
    exact->add_option("--g", g, "quadratic coupling")->capture_default_str();
    exact->add_option("--levels", levels, "number of levels")->capture_default_str();
    exact->add_option("--tol", tol, "relative convergence tolerance")->capture_default_str();

    std::string spread_n = "0..5";
    CLI::App* spread_cmd = app.add_subcommand(
        "spread", "flat-region spread of the k3 sum and the resummed expectation");
    spread_cmd->add_option("--n", spread_n, "levels")->capture_default_str();
    spread_cmd->add_option("--g", g, "quadratic coupling")->capture_default_str();

    CLI::App* report = app.add_subcommand("report", "run the acceptance gate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (zsweep->parsed())
            return cmd_zsweep(common, n_list, g, z_range, tags, with_exact);
        if (select->parsed())
            return cmd_select(common, method, n_list, g, orders,
                              orders_opt->count() > 0, strict);
        if (exact->parsed())
            return cmd_exact(common, g, levels, tol);
        if (spread_cmd->parsed())
            return cmd_spread(common, spread_n, g);
        if (report->parsed())
            return cmd_report();
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
