#include "econ/pipeline.hpp"

#include "econ/diagnostics.hpp"
#include "econ/dynamics.hpp"
#include "econ/errors.hpp"
#include "econ/unitroot.hpp"
#include "econ/vecm.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace econ {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string stars(double p) {
    if (p < 0.01) return "***";
    if (p < 0.05) return "**";
    if (p < 0.10) return "*";
    return "";
}

} // namespace

PipelineConfig PipelineConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    PipelineConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw SchemaError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "data") c.data_path = val;
            else if (key == "output_dir") c.output_dir = val;
            else if (key == "columns") c.columns = split_list(val);
            else if (key == "log_column") c.log_column = val;
            else if (key == "max_lag") c.max_lag = std::stoi(val);
            else if (key == "significance_pct") c.significance_pct = std::stoi(val);
            else if (key == "weak_exogeneity_level") c.weak_exogeneity_level = std::stod(val);
            else if (key == "det_case") c.johansen_case = det_case_from_string(val);
            else if (key == "horizon") c.horizon = std::stoi(val);
            else if (key == "bootstrap_replications") c.bootstrap_replications = std::stoi(val);
            else if (key == "seed") c.seed = std::stoull(val);
            else if (key == "granger_differences") c.granger_differences = (val == "true" || val == "1");
            else if (key == "granger_lag") c.granger_lag = std::stoi(val);
            else if (key == "portmanteau_h") c.portmanteau_h = std::stoi(val);
            else if (key == "arch_lags") c.arch_lags = std::stoi(val);
            else throw SchemaError("config line " + std::to_string(lineno) +
                                   ": unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw SchemaError("config line " + std::to_string(lineno) +
                              ": bad value '" + val + "' for key '" + key + "'");
        }
    }
    if (c.data_path.empty()) {
        throw SchemaError("config is missing the 'data' key");
    }
    return c;
}

void Table::add_row(const std::string& rname, std::vector<double> values,
                    std::vector<std::string> row_marks) {
    if (values.size() != column_names.size()) {
        throw InvalidArgumentError("Table::add_row: row width mismatch in '" +
                                   name + "'");
    }
    row_names.push_back(rname);
    cells.push_back(std::move(values));
    if (!row_marks.empty()) {
        if (row_marks.size() != column_names.size()) {
            throw InvalidArgumentError("Table::add_row: mark width mismatch in '" +
                                       name + "'");
        }
    } else {
        row_marks.assign(column_names.size(), "");
    }
    marks.push_back(std::move(row_marks));
}

StudyReport run_pipeline(const PipelineConfig& config) {
    StudyReport rep;
    std::string stage = "load";
    try {
        // --- data ingestion and transformation ---
        Dataset raw = config.columns.empty()
                          ? load_csv(config.data_path)
                          : [&] {
                                std::vector<std::pair<std::string, std::string>> spec;
                                for (const auto& cname : config.columns) {
                                    spec.emplace_back(cname, cname);
                                }
                                return load_csv(config.data_path, spec);
                            }();
        Dataset d = raw;
        if (!config.log_column.empty()) {
            d = d.with_replaced(config.log_column,
                                log_transform(d.at(config.log_column)));
        }
        const std::vector<std::string> vars = d.names();
        const int k = d.k();

        // --- table 1: descriptive statistics ---
        stage = "descriptives";
        {
            Table t;
            t.name = "table01_descriptives";
            t.column_names = {"mean", "median", "max", "min", "sd", "n"};
            for (const auto& v : vars) {
                const DescriptiveStats s = describe(d.at(v));
                t.add_row(v, {s.mean, s.median, s.max, s.min, s.sd,
                              static_cast<double>(s.n_obs)});
            }
            rep.tables.push_back(std::move(t));
        }

        // --- table 2: unit roots (PP, trend in levels, drift in differences) ---
        stage = "unit-roots";
        bool all_i1 = true;
        {
            Table t;
            t.name = "table02_unit_roots";
            t.column_names = {"pp_level", "crit_level_5pct", "pp_diff",
                              "crit_diff_5pct", "order"};
            for (const auto& v : vars) {
                const UnitRootResult lev =
                    pp_test(d.at(v), Deterministic::DriftTrend);
                const UnitRootResult dif =
                    pp_test(first_difference(d.at(v)), Deterministic::Drift);
                const int order = integration_order(d.at(v),
                                                    Deterministic::DriftTrend,
                                                    Deterministic::Drift);
                if (order != 1) all_i1 = false;
                t.add_row(v, {lev.statistic, lev.critical_values.at(5),
                              dif.statistic, dif.critical_values.at(5),
                              static_cast<double>(order)});
                rep.decisions.push_back(v + " is I(" + std::to_string(order) +
                                        ") by the Phillips-Perron test");
            }
            rep.tables.push_back(std::move(t));
        }
        if (!all_i1) {
            rep.skipped.emplace_back(
                "cointegration: not every series is I(1), so the Johansen "
                "stages do not apply");
            rep.complete = false;
            rep.failure_stage = "unit-roots";
            rep.failure_message = "series are not all integrated of order one";
            return rep;
        }

        // --- table 3: VAR lag selection on the full system ---
        stage = "lag-selection";
        const LagSelection sel = select_lag_order(d, config.max_lag);
        {
            Table t;
            t.name = "table03_lag_selection";
            t.column_names = {"AIC", "HQ", "SC", "FPE"};
            for (const auto& row : sel.table) {
                std::vector<std::string> m(4, "");
                if (row.lag == sel.chosen_lag_per_criterion.at("AIC")) m[0] = "*";
                if (row.lag == sel.chosen_lag_per_criterion.at("HQ")) m[1] = "*";
                if (row.lag == sel.chosen_lag_per_criterion.at("SC")) m[2] = "*";
                if (row.lag == sel.chosen_lag_per_criterion.at("FPE")) m[3] = "*";
                t.add_row("lag" + std::to_string(row.lag),
                          {row.criteria.aic, row.criteria.hq, row.criteria.sc,
                           row.criteria.fpe},
                          m);
            }
            rep.tables.push_back(std::move(t));
        }
        const int p = sel.chosen_lag_per_criterion.at("AIC");
        rep.decisions.push_back("lag order " + std::to_string(p) +
                                " selected by AIC (SC prefers " +
                                std::to_string(sel.chosen_lag_per_criterion.at("SC")) +
                                ")");
        if (p < 2) {
            rep.skipped.emplace_back(
                "vecm: AIC lag order below 2 leaves no short-run dynamics; "
                "the error-correction stages are skipped");
            rep.complete = false;
            rep.failure_stage = "lag-selection";
            rep.failure_message = "selected lag order below 2";
            return rep;
        }

        // --- table 4: Johansen cointegration on the full system ---
        stage = "johansen";
        const JohansenResult joh = johansen_test(d, p, config.johansen_case);
        {
            Table t;
            t.name = "table04_johansen";
            t.column_names = {"eigenvalue", "trace", "trace_crit_5pct",
                              "max_eigen", "eigen_crit_5pct"};
            for (int r = 0; r < k; ++r) {
                std::vector<std::string> m(5, "");
                if (joh.trace_stats[r] > joh.crit_trace_5pct[r]) m[1] = "**";
                if (joh.eigen_stats[r] > joh.crit_eigen_5pct[r]) m[3] = "**";
                t.add_row("r<=" + std::to_string(r),
                          {joh.eigenvalues[r], joh.trace_stats[r],
                           joh.crit_trace_5pct[r], joh.eigen_stats[r],
                           joh.crit_eigen_5pct[r]},
                          m);
            }
            rep.tables.push_back(std::move(t));
        }
        const int rank = joh.decided_rank;
        rep.decisions.push_back("cointegrating rank " + std::to_string(rank) +
                                " by the trace test (max-eigenvalue: " +
                                std::to_string(joh.decided_rank_eigen) + ")");
        if (rank < 1 || rank >= k) {
            rep.skipped.emplace_back(
                "vecm: trace test found rank " + std::to_string(rank) +
                "; a VECM needs 0 < r < k");
            rep.complete = false;
            rep.failure_stage = "johansen";
            rep.failure_message = "no usable cointegrating rank";
            return rep;
        }

        // --- table 5 / appendix a1: full-system VECM ---
        stage = "vecm-full";
        const VecmModel full = fit_vecm(d, p, rank, config.johansen_case);
        {
            Table t;
            t.name = "table05_vecm_alpha";
            for (int j = 0; j < rank; ++j) {
                t.column_names.push_back("ECT" + std::to_string(j + 1));
            }
            for (int e = 0; e < k; ++e) {
                std::vector<double> row;
                std::vector<std::string> m;
                for (int j = 0; j < rank; ++j) {
                    row.push_back(full.alpha(e, j));
                    m.push_back(stars(full.p_values(j, e)));
                }
                t.add_row("d" + vars[static_cast<std::size_t>(e)],
                          std::move(row), std::move(m));
            }
            rep.tables.push_back(std::move(t));
        }
        {
            Table t;
            t.name = "appendix_a1_gamma_full";
            for (int lag = 1; lag <= full.p_diff; ++lag) {
                for (const auto& v : vars) {
                    t.column_names.push_back("d" + v + "_l" + std::to_string(lag));
                }
            }
            for (int e = 0; e < k; ++e) {
                std::vector<double> row;
                std::vector<std::string> m;
                for (int lag = 0; lag < full.p_diff; ++lag) {
                    for (int j = 0; j < k; ++j) {
                        row.push_back(full.gamma[static_cast<std::size_t>(lag)](e, j));
                        m.push_back(stars(full.p_values(rank + lag * k + j, e)));
                    }
                }
                t.add_row("d" + vars[static_cast<std::size_t>(e)],
                          std::move(row), std::move(m));
            }
            rep.tables.push_back(std::move(t));
        }

        // --- appendix a2: weak exogeneity, then the restricted system ---
        stage = "weak-exogeneity";
        std::vector<std::string> keep;
        {
            Table t;
            t.name = "appendix_a2_weak_exogeneity";
            t.column_names = {"lr_statistic", "df", "p_value"};
            for (const auto& v : vars) {
                const WeakExogeneityResult w = weak_exogeneity_test(full, v);
                const bool exo = w.p_value >= config.weak_exogeneity_level;
                t.add_row(v, {w.lr_statistic, static_cast<double>(w.df), w.p_value},
                          {"", "", exo ? "" : stars(w.p_value)});
                rep.decisions.push_back(
                    v + (exo ? " is" : " is not") +
                    " weakly exogenous at the 10% level (p = " +
                    std::to_string(w.p_value) + ")");
                if (!exo) keep.push_back(v);
            }
            rep.tables.push_back(std::move(t));
        }
        if (static_cast<int>(keep.size()) == k) {
            rep.skipped.emplace_back(
                "restriction: no variable is weakly exogenous, so the "
                "restricted system equals the full system");
        }
        if (keep.size() < 2) {
            rep.skipped.emplace_back(
                "restriction: fewer than two endogenous variables remain; "
                "keeping the full system");
            keep = vars;
        }

        // --- appendix a4/a5 + table 6: restricted system ---
        stage = "vecm-restricted";
        const LagSelection sel_sub = select_lag_order(d.subset(keep), config.max_lag);
        const int p_sub = sel_sub.chosen_lag_per_criterion.at("AIC");
        {
            Table t;
            t.name = "appendix_a4_lag_selection";
            t.column_names = {"AIC", "HQ", "SC", "FPE"};
            for (const auto& row : sel_sub.table) {
                std::vector<std::string> m(4, "");
                if (row.lag == sel_sub.chosen_lag_per_criterion.at("AIC")) m[0] = "*";
                if (row.lag == sel_sub.chosen_lag_per_criterion.at("HQ")) m[1] = "*";
                if (row.lag == sel_sub.chosen_lag_per_criterion.at("SC")) m[2] = "*";
                if (row.lag == sel_sub.chosen_lag_per_criterion.at("FPE")) m[3] = "*";
                t.add_row("lag" + std::to_string(row.lag),
                          {row.criteria.aic, row.criteria.hq, row.criteria.sc,
                           row.criteria.fpe},
                          m);
            }
            rep.tables.push_back(std::move(t));
        }
        const RestrictedChain chain =
            restrict_to_subset(d, keep, std::max(p_sub, 2), config.johansen_case);
        const int kk = static_cast<int>(keep.size());
        {
            Table t;
            t.name = "appendix_a5_johansen";
            t.column_names = {"eigenvalue", "trace", "trace_crit_5pct",
                              "max_eigen", "eigen_crit_5pct"};
            for (int r = 0; r < kk; ++r) {
                std::vector<std::string> m(5, "");
                if (chain.johansen.trace_stats[r] > chain.johansen.crit_trace_5pct[r])
                    m[1] = "**";
                if (chain.johansen.eigen_stats[r] > chain.johansen.crit_eigen_5pct[r])
                    m[3] = "**";
                t.add_row("r<=" + std::to_string(r),
                          {chain.johansen.eigenvalues[r],
                           chain.johansen.trace_stats[r],
                           chain.johansen.crit_trace_5pct[r],
                           chain.johansen.eigen_stats[r],
                           chain.johansen.crit_eigen_5pct[r]},
                          m);
            }
            rep.tables.push_back(std::move(t));
        }
        const VecmModel& res = chain.model;
        rep.decisions.push_back("restricted system {" + [&] {
                                    std::string s;
                                    for (std::size_t i = 0; i < keep.size(); ++i) {
                                        if (i) s += ", ";
                                        s += keep[i];
                                    }
                                    return s;
                                }() + "} has rank " + std::to_string(res.r));
        {
            Table t;
            t.name = "table06_vecm_restricted";
            for (int j = 0; j < res.r; ++j) {
                t.column_names.push_back("ECT" + std::to_string(j + 1));
            }
            for (int lag = 1; lag <= res.p_diff; ++lag) {
                for (const auto& v : keep) {
                    t.column_names.push_back("d" + v + "_l" + std::to_string(lag));
                }
            }
            for (int e = 0; e < kk; ++e) {
                std::vector<double> row;
                std::vector<std::string> m;
                for (int i = 0; i < res.r + res.p_diff * kk; ++i) {
                    row.push_back(res.coef(i, e));
                    m.push_back(stars(res.p_values(i, e)));
                }
                t.add_row("d" + keep[static_cast<std::size_t>(e)],
                          std::move(row), std::move(m));
            }
            rep.tables.push_back(std::move(t));
        }

        // --- table 7: normalized long-run relations ---
        stage = "long-run";
        {
            const auto lrs = normalize_long_run(res, keep);
            Table t;
            t.name = "table07_long_run";
            t.column_names = lrs.front().variables;
            for (const auto& lr : lrs) {
                std::vector<double> row(lr.coefficients.data(),
                                        lr.coefficients.data() +
                                            lr.coefficients.size());
                t.add_row("normalized_on_" + lr.normalization_variable,
                          std::move(row));
            }
            rep.tables.push_back(std::move(t));
        }

        // --- table 8: pairwise Granger causality for the first two columns ---
        stage = "granger";
        {
            Dataset gd = config.granger_differences ? d.differenced() : d;
            const std::string pre = config.granger_differences ? "D" : "";
            const std::string a = pre + vars[0];
            const std::string b = pre + vars[1];
            Table t;
            t.name = "table08_granger";
            t.column_names = {"F", "df1", "df2", "p_value"};
            for (const auto& [cause, effect] : {std::pair{a, b}, std::pair{b, a}}) {
                const GrangerResult g =
                    granger_test(gd, cause, effect, config.granger_lag);
                t.add_row(cause + "->" + effect,
                          {g.statistic, static_cast<double>(g.df1),
                           static_cast<double>(g.df2), g.p_value},
                          {"", "", "", stars(g.p_value)});
                rep.decisions.push_back(
                    cause + (g.reject_at_5pct ? " Granger-causes "
                                              : " does not Granger-cause ") +
                    effect + " at the 5% level (p = " +
                    std::to_string(g.p_value) + ")");
            }
            rep.tables.push_back(std::move(t));
        }

        // --- table 9: residual diagnostics, full and restricted ---
        stage = "diagnostics";
        {
            Table t;
            t.name = "table09_diagnostics";
            t.column_names = {"portmanteau_p", "jarque_bera_p", "arch_lm_p"};
            // a test that is infeasible for one model (e.g. ARCH-LM when
            // q lags of vech products exceed the sample) is skipped with a
            // note; the verdicts below only ever read the restricted model
            const auto guarded = [&rep](const char* model, const char* test,
                                        auto&& run) -> double {
                try {
                    return run().p_value;
                } catch (const Error& e) {
                    rep.skipped.push_back(std::string(test) + " (" + model +
                                          " model): " + e.what());
                    return std::numeric_limits<double>::quiet_NaN();
                }
            };
            const auto row = [&](const char* model, const Eigen::MatrixXd& E,
                                 int p_levels) {
                const double pq = guarded(model, "portmanteau", [&] {
                    return portmanteau(E, config.portmanteau_h, p_levels);
                });
                const double pj =
                    guarded(model, "jarque-bera", [&] { return jarque_bera(E); });
                const double pa = guarded(model, "arch-lm", [&] {
                    return arch_lm(E, config.arch_lags);
                });
                t.add_row(model, {pq, pj, pa});
                return std::array<double, 3>{pq, pj, pa};
            };
            row("full", full.residuals, p);
            const auto pr = row("restricted", res.residuals, res.p_diff + 1);
            rep.tables.push_back(std::move(t));
            auto verdict = [&rep](const char* test, double pv) {
                if (std::isnan(pv)) return;
                rep.decisions.push_back(
                    std::string(test) +
                    (pv >= 0.05 ? ": no rejection" : ": rejected") +
                    " at 5% for the restricted model (p = " +
                    std::to_string(pv) + ")");
            };
            verdict("portmanteau", pr[0]);
            verdict("jarque-bera", pr[1]);
            verdict("arch-lm", pr[2]);
        }

        // --- table 10: FEVD of the second variable (investment inflows) ---
        stage = "fevd";
        {
            const FevdResult f = fevd(res, config.horizon, keep);
            const std::string target = keep.size() > 1 ? keep[1] : keep[0];
            const int ti = static_cast<int>(
                std::find(keep.begin(), keep.end(), target) - keep.begin());
            Table t;
            t.name = "table10_fevd";
            t.column_names = keep;
            for (int h = 0; h < config.horizon; ++h) {
                std::vector<double> row;
                for (int j = 0; j < kk; ++j) {
                    row.push_back(f.shares[static_cast<std::size_t>(h)](ti, j));
                }
                t.add_row("h" + std::to_string(h + 1), std::move(row));
            }
            rep.tables.push_back(std::move(t));
        }

        // --- appendix: bootstrap IRF bands for the restricted system ---
        stage = "irf";
        {
            const IrfResult ir =
                bootstrap_bands(res, config.horizon, keep,
                                config.bootstrap_replications, config.seed);
            Table t;
            t.name = "appendix_irf_bands";
            for (int j = 0; j < kk; ++j) {
                for (int i = 0; i < kk; ++i) {
                    const std::string pair = keep[static_cast<std::size_t>(j)] +
                                             "->" +
                                             keep[static_cast<std::size_t>(i)];
                    t.column_names.push_back(pair);
                    t.column_names.push_back(pair + "_lo");
                    t.column_names.push_back(pair + "_hi");
                }
            }
            for (int h = 0; h <= config.horizon; ++h) {
                std::vector<double> row;
                for (int j = 0; j < kk; ++j) {
                    for (int i = 0; i < kk; ++i) {
                        row.push_back(ir.responses[static_cast<std::size_t>(h)](i, j));
                        row.push_back(ir.lower[static_cast<std::size_t>(h)](i, j));
                        row.push_back(ir.upper[static_cast<std::size_t>(h)](i, j));
                    }
                }
                t.add_row("h" + std::to_string(h), std::move(row));
            }
            rep.tables.push_back(std::move(t));
        }

        rep.complete = true;
    } catch (const Error& e) {
        rep.complete = false;
        rep.failure_stage = stage;
        rep.failure_message = e.what();
    }
    return rep;
}

void emit_report_csv(const StudyReport& report, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& t : report.tables) {
        const std::string path = dir + "/" + t.name + ".csv";
        std::ofstream out(path);
        if (!out) {
            throw IoError("cannot write '" + path + "'");
        }
        out << "row";
        for (const auto& c : t.column_names) out << "," << c;
        out << "\n";
        out << std::fixed << std::setprecision(4);
        for (std::size_t i = 0; i < t.row_names.size(); ++i) {
            out << t.row_names[i];
            for (std::size_t j = 0; j < t.cells[i].size(); ++j) {
                out << "," << t.cells[i][j];
                if (!t.marks[i][j].empty()) out << t.marks[i][j];
            }
            out << "\n";
        }
    }
    const std::string dpath = dir + "/decisions.txt";
    std::ofstream out(dpath);
    if (!out) {
        throw IoError("cannot write '" + dpath + "'");
    }
    for (const auto& s : report.decisions) out << s << "\n";
    for (const auto& s : report.skipped) out << "skipped: " << s << "\n";
    if (!report.complete) {
        out << "failed at " << report.failure_stage << ": "
            << report.failure_message << "\n";
    }
}

void emit_report_json(const StudyReport& report, const std::string& path) {
    nlohmann::json j;
    j["complete"] = report.complete;
    if (!report.complete) {
        j["failure_stage"] = report.failure_stage;
        j["failure_message"] = report.failure_message;
    }
    j["decisions"] = report.decisions;
    j["skipped"] = report.skipped;
    j["tables"] = nlohmann::json::array();
    for (const auto& t : report.tables) {
        nlohmann::json tj;
        tj["name"] = t.name;
        tj["columns"] = t.column_names;
        tj["rows"] = t.row_names;
        tj["cells"] = t.cells;
        tj["marks"] = t.marks;
        j["tables"].push_back(std::move(tj));
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    out << j.dump(2) << "\n";
}

} // namespace econ
