// posetlab: batch driver for the forbidden-subposet workbench.
// Exit codes: 0 ok, 1 usage/input error, 2 a checked bound or invariant failed.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetlab/bounds.hpp"
#include "posetlab/extremal.hpp"
#include "posetlab/isoperimetry.hpp"
#include "posetlab/json_io.hpp"
#include "posetlab/oracle.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace posetlab;
using nlohmann::json;

namespace {

struct Output {
    std::string format = "csv"; // csv | json
    std::string path;           // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
        out << text;
    }
};

using Row = std::vector<std::pair<std::string, std::string>>;

std::string sanitize_csv(std::string v) {
    for (char& c : v)
        if (c == ',' || c == '\n') c = ';';
    return v;
}

std::string render(const std::vector<std::string>& header, const std::vector<Row>& rows,
                   const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const Row& r : rows) {
            json obj = json::object();
            for (const auto& [k, v] : r) obj[k] = v;
            arr.push_back(obj);
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const Row& r : rows) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            std::string v;
            for (const auto& [k, val] : r)
                if (k == header[i]) { v = val; break; }
            out << (i ? "," : "") << sanitize_csv(v);
        }
        out << "\n";
    }
    return out.str();
}

SetFamily load_family(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open family file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_family(ss.str());
}

std::string opt_real(const std::optional<double>& v) {
    return v ? format_real(*v) : std::string{};
}

Row bound_row(const BoundReport& r) {
    std::string n = r.param("n");
    if (n.empty()) n = r.param("l");
    return {{"name", r.name},       {"n", n},
            {"m", r.param("m")},    {"lhs", opt_real(r.lhs)},
            {"rhs", format_real(r.rhs)}, {"verdict", to_string(r.verdict)}};
}

bool any_violated(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == Verdict::violated) return true;
    return false;
}

int emit_bound_reports(const std::vector<BoundReport>& reports, const Output& out) {
    std::vector<Row> rows;
    for (const auto& r : reports) rows.push_back(bound_row(r));
    out.write(render({"name", "n", "m", "lhs", "rhs", "verdict"}, rows, out.format));
    return any_violated(reports) ? 2 : 0;
}

// log-spaced integer sample of [1, max_m], deduplicated
std::vector<double> log_spaced(double max_m, int samples) {
    std::vector<double> out;
    if (max_m < 1) return out;
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        double v = std::pow(max_m, t);
        v = v < 9e15 ? std::round(v) : v;
        if (out.empty() || v > out.back()) out.push_back(v);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"posetlab: supersaturation workbench for forbidden subposets"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    std::uint64_t seed = 1;
    int threads = 0;
    Output output;
    app.add_option("--seed", seed, "PRNG seed (counter-based generator; reports are seed-deterministic)");
    app.add_option("--threads", threads, "OpenMP thread budget (0 = library default); env POSETLAB_THREADS overrides");
    app.add_option("--format", output.format, "report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", output.path, "output path (default stdout)");

    // count
    auto* cmd_count = app.add_subcommand("count", "count copies of a poset in a family (CSV: op,poset,n,size,value)");
    std::string count_family, count_poset = "butterfly";
    cmd_count->add_option("--family", count_family, "family JSON file")->required();
    cmd_count->add_option("--poset", count_poset, "butterfly | chain:k | vee | wedge");

    // construct
    auto* cmd_construct = app.add_subcommand(
        "construct", "emit the two-middle-layers-plus-code-layer family and a sidecar report "
                     "{sigma,f,E,butterfly_count}; --out writes <out> and <out>.report.json");
    int cons_n = 0;
    std::uint64_t cons_extra = 0;
    std::string cons_strategy = "residue";
    cmd_construct->add_option("--n", cons_n, "ground set size")->required();
    cmd_construct->add_option("--extra", cons_extra, "number of extra sets above the middle");
    cmd_construct->add_option("--strategy", cons_strategy, "residue | greedy")
        ->check(CLI::IsMember({"residue", "greedy"}));

    // bounds
    auto* cmd_bounds = app.add_subcommand(
        "bounds", "numeric inequality reports (CSV: name,n,m,lhs,rhs,verdict)");
    std::string bounds_grid, bounds_stab;
    int bounds_samples = 8;
    bool literal_vi = false;
    int stab_n = 0;
    double stab_m = 0;
    std::optional<double> stab_lhs;
    double stab_lhs_raw = 0;
    cmd_bounds->add_option("--grid", bounds_grid, "x/g property grid over l_min:l_max");
    cmd_bounds->add_option("--samples", bounds_samples, "log-spaced m samples per l (default 8)");
    cmd_bounds->add_flag("--literal-vi", literal_vi,
                         "include the literal 4l/3 threshold rows (violated at l=3,m=4)");
    cmd_bounds->add_option("--stab", bounds_stab,
                           "stability RHS: weakstab | spernerstab | butterflystab_4 | butterflystab_6 | cor_butt");
    cmd_bounds->add_option("--n", stab_n, "n for --stab");
    cmd_bounds->add_option("--m", stab_m, "m for --stab");
    auto* lhs_opt = cmd_bounds->add_option("--lhs", stab_lhs_raw, "measured |F| to compare against the RHS");

    // iso
    auto* cmd_iso = app.add_subcommand(
        "iso", "isoperimetry and census reports (CSV: op,n,k,param,lhs,rhs,verdict)");
    std::string iso_family;
    int iso_k = 0;
    std::optional<double> iso_delta, iso_epsilon;
    double iso_delta_raw = 0, iso_eps_raw = 0;
    bool iso_sqrt = false;
    cmd_iso->add_option("--family", iso_family, "family JSON file")->required();
    cmd_iso->add_option("--k", iso_k, "uniformity level of the family")->required();
    auto* delta_opt = cmd_iso->add_option("--delta", iso_delta_raw, "edge-count bound check at this delta");
    auto* eps_opt = cmd_iso->add_option("--epsilon", iso_eps_raw, "bad-superset census at threshold (1-eps)k");
    cmd_iso->add_flag("--sqrt", iso_sqrt, "bad-superset census at threshold k+1-2*sqrt(m)");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force optima (witness JSON on stdout/--out)");
    std::string oracle_mode, oracle_poset = "butterfly", oracle_checkpoint;
    int oracle_n = 0, oracle_size = -1;
    bool allow_large = false;
    cmd_oracle->add_option("mode", oracle_mode, "max-free | min-copies")->required();
    cmd_oracle->add_option("--n", oracle_n, "ground set size")->required();
    cmd_oracle->add_option("--size", oracle_size, "family size (min-copies)");
    cmd_oracle->add_option("--poset", oracle_poset, "butterfly | chain:k | vee | wedge");
    cmd_oracle->add_flag("--allow-large", allow_large, "permit the hours-scale n=5 min-copies sweep");
    cmd_oracle->add_option("--checkpoint", oracle_checkpoint,
                           "JSONL checkpoint file for resumable min-copies sweeps");

    // audit
    auto* cmd_audit = app.add_subcommand("audit", "randomized audits (CSV: name,n,m,lhs,rhs,verdict)");
    std::string audit_what;
    int audit_n = 0, audit_emax = 2, audit_trials = 20;
    cmd_audit->add_option("what", audit_what, "prop1")->required();
    cmd_audit->add_option("--n", audit_n, "ground set size")->required();
    cmd_audit->add_option("--e-max", audit_emax, "largest number of extra sets");
    cmd_audit->add_option("--trials", audit_trials, "random supersets per E");

    // lym
    auto* cmd_lym = app.add_subcommand("lym", "Lubell sums, exact rationals (CSV: op,n,size,value)");
    std::string lym_family;
    bool lym_improved = false;
    cmd_lym->add_option("--family", lym_family, "family JSON file")->required();
    cmd_lym->add_flag("--improved", lym_improved, "weighted middle-set variant");

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("POSETLAB_THREADS")) threads = std::atoi(env);
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif

    try {
        if (*cmd_count) {
            SetFamily F = load_family(count_family);
            Poset P = make_poset(count_poset);
            Natural value;
            if (count_poset == "butterfly") value = count_butterflies(F);
            else if (count_poset.rfind("chain:", 0) == 0) value = count_chains(F, P.size);
            else if (count_poset == "vee") value = count_vees(F);
            else if (count_poset == "wedge") value = count_wedges(F);
            else value = count_copies(F, P);
            std::vector<Row> rows{{{"op", "count"},
                                   {"poset", count_poset},
                                   {"n", std::to_string(F.n)},
                                   {"size", std::to_string(F.size())},
                                   {"value", value.to_decimal()}}};
            output.write(render({"op", "poset", "n", "size", "value"}, rows, output.format));
            return 0;
        }

        if (*cmd_construct) {
            CodeStrategy strat = cons_strategy == "residue" ? CodeStrategy::residue : CodeStrategy::greedy;
            SetFamily fam = build_construction(cons_n, cons_extra, strat);
            Natural copies = count_butterflies(fam);
            json report{{"sigma", sigma(cons_n, 2)},
                        {"f", f_n(cons_n)},
                        {"E", cons_extra},
                        {"butterfly_count", copies.to_decimal()}};
            json famj = family_to_json(fam);
            if (output.path.empty()) {
                std::cout << json{{"family", famj}, {"report", report}}.dump(2) << "\n";
            } else {
                Output fam_out{"json", output.path};
                fam_out.write(famj.dump(2) + "\n");
                Output rep_out{"json", output.path + ".report.json"};
                rep_out.write(report.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_bounds) {
            std::vector<BoundReport> reports;
            if (!bounds_grid.empty()) {
                auto colon = bounds_grid.find(':');
                if (colon == std::string::npos)
                    throw std::runtime_error("--grid expects l_min:l_max");
                int lmin = std::stoi(bounds_grid.substr(0, colon));
                int lmax = std::stoi(bounds_grid.substr(colon + 1));
                for (int l = lmin; l <= lmax; ++l) {
                    for (double m : log_spaced(gen_binom(2.0 * l, l), bounds_samples)) {
                        for (auto& r : prop_change_report(l, m, std::floor(m / 2))) {
                            if (r.name == "vi-literal" && !literal_vi) continue;
                            reports.push_back(std::move(r));
                        }
                    }
                }
            }
            if (!bounds_stab.empty()) {
                if (*lhs_opt) stab_lhs = stab_lhs_raw;
                reports.push_back(stability_rhs(stability_from_name(bounds_stab), stab_n, stab_m, stab_lhs));
            }
            if (reports.empty()) throw std::runtime_error("bounds: pass --grid and/or --stab");
            return emit_bound_reports(reports, output);
        }

        if (*cmd_iso) {
            if (*delta_opt) iso_delta = iso_delta_raw;
            if (*eps_opt) iso_epsilon = iso_eps_raw;
            int picked = (iso_delta ? 1 : 0) + (iso_epsilon ? 1 : 0) + (iso_sqrt ? 1 : 0);
            if (picked != 1) throw std::runtime_error("iso: pass exactly one of --delta, --epsilon, --sqrt");
            SetFamily F = load_family(iso_family);
            std::vector<Row> rows;
            bool violated = false;
            auto push = [&](const std::string& op, const std::string& param, const std::string& lhs,
                            const std::string& rhs, Verdict v) {
                rows.push_back({{"op", op},
                                {"n", std::to_string(F.n)},
                                {"k", std::to_string(iso_k)},
                                {"param", param},
                                {"lhs", lhs},
                                {"rhs", rhs},
                                {"verdict", to_string(v)}});
                violated |= v == Verdict::violated;
            };
            if (iso_delta) {
                BoundReport r = isoperi_check(F, iso_k, *iso_delta);
                push("isoperi", "delta=" + format_real(*iso_delta), opt_real(r.lhs),
                     format_real(r.rhs), r.verdict);
            } else {
                CensusMode mode = iso_sqrt ? CensusMode::sqrt_bound : CensusMode::epsilon;
                CensusResult res = bad_superset_census(F, iso_k, mode, iso_epsilon.value_or(0.0));
                std::string op = iso_sqrt ? "census-sqrt" : "census-eps";
                std::string tag = iso_sqrt ? "" : "eps=" + format_real(*iso_epsilon) + ";";
                for (const auto& row : res.layers) {
                    push(op, tag + "layer=" + std::to_string(row.layer) +
                             ";threshold=" + format_real(row.threshold),
                         std::to_string(row.bad_count),
                         row.bound ? format_real(*row.bound) : "", row.verdict);
                }
                push(op, tag + "cumulative;m=" + std::to_string(res.missing),
                     std::to_string(res.cumulative_bad),
                     res.cumulative_bound ? format_real(*res.cumulative_bound) : "",
                     res.cumulative_verdict);
            }
            output.write(render({"op", "n", "k", "param", "lhs", "rhs", "verdict"}, rows, output.format));
            return violated ? 2 : 0;
        }

        if (*cmd_oracle) {
            Poset P = make_poset(oracle_poset);
            Witness w;
            if (oracle_mode == "max-free") {
                w = max_p_free(oracle_n, P);
            } else if (oracle_mode == "min-copies") {
                if (oracle_size < 0) throw std::runtime_error("oracle min-copies: pass --size");
                MinCopiesOptions opt;
                opt.allow_large = allow_large;
                opt.checkpoint_path = oracle_checkpoint;
                w = min_copies(oracle_n, oracle_size, P, opt);
            } else {
                throw std::runtime_error("oracle: mode must be max-free or min-copies");
            }
            json j{{"kind", w.kind == Witness::Kind::max_free ? "max-free" : "min-copies"},
                   {"objective", w.objective.to_decimal()},
                   {"heuristic", w.heuristic},
                   {"poset", oracle_poset},
                   {"family", family_to_json(w.family)}};
            output.write(j.dump(2) + "\n");
            return 0;
        }

        if (*cmd_audit) {
            if (audit_what != "prop1") throw std::runtime_error("audit: only 'prop1' is available");
            return emit_bound_reports(audit_prop1(audit_n, audit_emax, seed, audit_trials), output);
        }

        if (*cmd_lym) {
            SetFamily F = load_family(lym_family);
            Rational value = lym_improved ? improved_lym_sum(F) : lubell_sum(F);
            std::vector<Row> rows{{{"op", lym_improved ? "improved_lym" : "lubell"},
                                   {"n", std::to_string(F.n)},
                                   {"size", std::to_string(F.size())},
                                   {"value", value.str()}}};
            output.write(render({"op", "n", "size", "value"}, rows, output.format));
            return 0;
        }
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << " (capacity " << e.capacity << ")\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
