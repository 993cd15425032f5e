// Command-line front end for the econ library: runs the full study
// pipeline or individual stages on a CSV of annual series.

#include "econ/diagnostics.hpp"
#include "econ/dynamics.hpp"
#include "econ/errors.hpp"
#include "econ/pipeline.hpp"
#include "econ/simulate.hpp"
#include "econ/unitroot.hpp"
#include "econ/vecm.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace econ;

Dataset load_with_log(const std::string& path, const std::string& log_column) {
    Dataset d = load_csv(path);
    if (!log_column.empty()) {
        d = d.with_replaced(log_column, log_transform(d.at(log_column)));
    }
    return d;
}

void print_table(const Table& t) {
    std::printf("# %s\n%-28s", t.name.c_str(), "");
    for (const auto& c : t.column_names) std::printf(" %14s", c.c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < t.row_names.size(); ++i) {
        std::printf("%-28s", t.row_names[i].c_str());
        for (std::size_t j = 0; j < t.cells[i].size(); ++j) {
            std::printf(" %11.4f%-3s", t.cells[i][j], t.marks[i][j].c_str());
        }
        std::printf("\n");
    }
    std::printf("\n");
}

Deterministic det_from(const std::string& s) {
    if (s == "none") return Deterministic::None;
    if (s == "drift") return Deterministic::Drift;
    if (s == "trend") return Deterministic::DriftTrend;
    throw InvalidArgumentError("deterministic term must be none, drift or trend");
}

int run(int argc, char** argv) {
    CLI::App app{"Cointegration and error-correction analysis of annual macro series"};
    app.require_subcommand(1);
    app.fallthrough(); // allow -d/--log after the subcommand name

    std::string data;
    std::string log_column;
    app.add_option("-d,--data", data, "input CSV (year column first)");
    app.add_option("--log", log_column, "column to log-transform on load");

    // pipeline
    auto* cmd_pipe = app.add_subcommand("pipeline", "run the full study end to end");
    std::string config_path;
    std::string out_dir = "report";
    bool want_json = false;
    cmd_pipe->add_option("-c,--config", config_path, "key = value config file");
    cmd_pipe->add_option("-o,--output", out_dir, "directory for the CSV tables");
    cmd_pipe->add_flag("--json", want_json,
                       "also write report.json into the output directory");

    // unitroot
    auto* cmd_ur = app.add_subcommand("unitroot", "ADF and PP tests per series");
    std::string det_s = "trend";
    int max_lag = 3;
    bool diff_too = false;
    cmd_ur->add_option("--det", det_s, "none | drift | trend");
    cmd_ur->add_option("--max-lag", max_lag, "ADF lag search bound");
    cmd_ur->add_flag("--diff", diff_too, "also test first differences (with drift)");

    // lagselect
    auto* cmd_lag = app.add_subcommand("lagselect", "VAR lag order criteria");
    int sel_max = 3;
    cmd_lag->add_option("--max-lag", sel_max, "largest candidate lag");

    // johansen
    auto* cmd_joh = app.add_subcommand("johansen", "trace and max-eigenvalue tests");
    int joh_p = 2;
    std::string case_s = "restricted-constant";
    cmd_joh->add_option("-p,--lags", joh_p, "level VAR lag order");
    cmd_joh->add_option("--case", case_s,
                        "none | restricted-constant | unrestricted-constant");

    // vecm
    auto* cmd_vecm = app.add_subcommand("vecm", "estimate the error-correction model");
    int vecm_p = 2;
    int vecm_r = -1;
    std::string vecm_case = "restricted-constant";
    bool show_exo = false;
    cmd_vecm->add_option("-p,--lags", vecm_p, "level VAR lag order");
    cmd_vecm->add_option("-r,--rank", vecm_r, "cointegrating rank (default: trace test)");
    cmd_vecm->add_option("--case", vecm_case,
                         "none | restricted-constant | unrestricted-constant");
    cmd_vecm->add_flag("--weak-exogeneity", show_exo, "LR tests per variable");

    // granger
    auto* cmd_gr = app.add_subcommand("granger", "bivariate Granger causality");
    std::string cause, effect;
    int gr_lag = 2;
    bool gr_levels = false;
    cmd_gr->add_option("--cause", cause)->required();
    cmd_gr->add_option("--effect", effect)->required();
    cmd_gr->add_option("--lag", gr_lag, "lag order of the test VAR");
    cmd_gr->add_flag("--levels", gr_levels, "test in levels instead of differences");

    // diagnose
    auto* cmd_diag = app.add_subcommand("diagnose", "VECM residual diagnostics");
    int dg_p = 2, dg_r = -1, dg_h = 10, dg_q = 5;
    cmd_diag->add_option("-p,--lags", dg_p, "level VAR lag order");
    cmd_diag->add_option("-r,--rank", dg_r, "cointegrating rank (default: trace test)");
    cmd_diag->add_option("--portmanteau-h", dg_h, "portmanteau horizon");
    cmd_diag->add_option("--arch-lags", dg_q, "ARCH-LM lag order");

    // irf / fevd
    auto* cmd_irf = app.add_subcommand("irf", "orthogonalized impulse responses");
    auto* cmd_fevd = app.add_subcommand("fevd", "forecast-error variance decomposition");
    int dy_p = 2, dy_r = -1, horizon = 9;
    int reps = 0;
    std::uint64_t seed = 20190101;
    for (auto* c : {cmd_irf, cmd_fevd}) {
        c->add_option("-p,--lags", dy_p, "level VAR lag order");
        c->add_option("-r,--rank", dy_r, "cointegrating rank (default: trace test)");
        c->add_option("-H,--horizon", horizon, "last horizon");
    }
    cmd_irf->add_option("--bootstrap", reps, "bootstrap replications for 95% bands");
    cmd_irf->add_option("--seed", seed, "bootstrap seed");

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "write a seeded synthetic dataset");
    std::string kind_s = "random-walk";
    int sim_T = 100, sim_k = 2;
    std::uint64_t sim_seed = 1;
    double ar_coef = 0.5;
    std::string sim_out = "simulated.csv";
    cmd_sim->add_option("--kind", kind_s,
                        "white-noise | random-walk | ar1 | arch1");
    cmd_sim->add_option("-T,--length", sim_T, "observations");
    cmd_sim->add_option("-k,--series", sim_k, "number of series");
    cmd_sim->add_option("--seed", sim_seed);
    cmd_sim->add_option("--ar", ar_coef, "AR(1) coefficient");
    cmd_sim->add_option("-o,--output", sim_out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    if (cmd_pipe->parsed()) {
        PipelineConfig cfg;
        if (!config_path.empty()) cfg = PipelineConfig::from_file(config_path);
        if (!data.empty()) cfg.data_path = data;
        if (!log_column.empty()) cfg.log_column = log_column;
        if (cfg.data_path.empty()) {
            throw InvalidArgumentError("pipeline needs --data or a config with a data key");
        }
        cfg.output_dir = out_dir;
        const StudyReport rep = run_pipeline(cfg);
        for (const auto& t : rep.tables) print_table(t);
        for (const auto& s : rep.decisions) std::printf("decision: %s\n", s.c_str());
        for (const auto& s : rep.skipped) std::printf("skipped: %s\n", s.c_str());
        emit_report_csv(rep, out_dir);
        if (want_json) emit_report_json(rep, out_dir + "/report.json");
        if (!rep.complete) {
            std::fprintf(stderr, "pipeline stopped at %s: %s\n",
                         rep.failure_stage.c_str(), rep.failure_message.c_str());
            return 1;
        }
        return 0;
    }

    if (cmd_sim->parsed()) {
        DgpSpec spec;
        if (kind_s == "white-noise") spec.kind = DgpKind::WhiteNoise;
        else if (kind_s == "random-walk") spec.kind = DgpKind::RandomWalk;
        else if (kind_s == "ar1") spec.kind = DgpKind::Ar1;
        else if (kind_s == "arch1") spec.kind = DgpKind::Arch1;
        else throw InvalidArgumentError("simulate kind must be white-noise, "
                                        "random-walk, ar1 or arch1");
        spec.T = sim_T;
        spec.k = sim_k;
        spec.seed = sim_seed;
        spec.ar_coefficient = ar_coef;
        save_csv(generate(spec), sim_out);
        std::printf("wrote %s (%d x %d, seed %llu)\n", sim_out.c_str(), sim_T,
                    sim_k, static_cast<unsigned long long>(sim_seed));
        return 0;
    }

    const Dataset d = load_with_log(data, log_column);

    if (cmd_ur->parsed()) {
        const Deterministic det = det_from(det_s);
        std::printf("%-12s %6s %12s %12s %8s\n", "series", "test", "statistic",
                    "crit_5pct", "lags/bw");
        for (const auto& s : d.series()) {
            const UnitRootResult adf = adf_test(s, det, max_lag);
            const UnitRootResult pp = pp_test(s, det);
            std::printf("%-12s %6s %12.4f %12.4f %8d\n", s.name().c_str(), "ADF",
                        adf.statistic, adf.critical_values.at(5), adf.lag_or_bandwidth);
            std::printf("%-12s %6s %12.4f %12.4f %8d\n", s.name().c_str(), "PP",
                        pp.statistic, pp.critical_values.at(5), pp.lag_or_bandwidth);
            if (diff_too) {
                const Series ds = first_difference(s);
                const UnitRootResult ppd = pp_test(ds, Deterministic::Drift);
                std::printf("%-12s %6s %12.4f %12.4f %8d\n", ds.name().c_str(),
                            "PP", ppd.statistic, ppd.critical_values.at(5),
                            ppd.lag_or_bandwidth);
            }
        }
        return 0;
    }

    if (cmd_lag->parsed()) {
        const LagSelection sel = select_lag_order(d, sel_max);
        std::printf("%4s %12s %12s %12s %14s\n", "lag", "AIC", "HQ", "SC", "FPE");
        for (const auto& row : sel.table) {
            std::printf("%4d %12.4f %12.4f %12.4f %14.6g\n", row.lag,
                        row.criteria.aic, row.criteria.hq, row.criteria.sc,
                        row.criteria.fpe);
        }
        for (const auto& [crit, lag] : sel.chosen_lag_per_criterion) {
            std::printf("%s chooses lag %d\n", crit.c_str(), lag);
        }
        std::printf("recommended lag: %d\n", sel.recommended);
        return 0;
    }

    if (cmd_joh->parsed()) {
        const JohansenResult j = johansen_test(d, joh_p, det_case_from_string(case_s));
        std::printf("%6s %10s %10s %12s %10s %12s\n", "null", "eigval", "trace",
                    "crit_5pct", "max-eig", "crit_5pct");
        for (int r = 0; r < d.k(); ++r) {
            std::printf("r<=%-3d %10.4f %10.4f %12.2f %10.4f %12.2f\n", r,
                        j.eigenvalues[r], j.trace_stats[r], j.crit_trace_5pct[r],
                        j.eigen_stats[r], j.crit_eigen_5pct[r]);
        }
        std::printf("trace test rank: %d (max-eigenvalue: %d)\n", j.decided_rank,
                    j.decided_rank_eigen);
        return 0;
    }

    auto fit_with_default_rank = [&](int p_levels, int r_opt) {
        if (r_opt < 0) {
            const JohansenResult j =
                johansen_test(d, p_levels, DetCase::RestrictedConstant);
            r_opt = j.decided_rank;
            std::printf("using trace-test rank %d\n", r_opt);
        }
        return fit_vecm(d, p_levels, r_opt, DetCase::RestrictedConstant);
    };

    if (cmd_vecm->parsed()) {
        int r = vecm_r;
        const DetCase dc = det_case_from_string(vecm_case);
        if (r < 0) {
            r = johansen_test(d, vecm_p, dc).decided_rank;
            std::printf("using trace-test rank %d\n", r);
        }
        const VecmModel m = fit_vecm(d, vecm_p, r, dc);
        std::printf("loglik %.4f, N = %d\n", m.log_likelihood, m.n_obs);
        std::printf("%-10s", "equation");
        for (int j = 0; j < m.r; ++j) std::printf(" %12s", ("ECT" + std::to_string(j + 1)).c_str());
        std::printf("\n");
        for (int e = 0; e < m.k; ++e) {
            std::printf("d%-9s", m.variable_names[static_cast<std::size_t>(e)].c_str());
            for (int j = 0; j < m.r; ++j) {
                std::printf(" %12.4f", m.alpha(e, j));
            }
            std::printf("\n");
        }
        const auto lrs = normalize_long_run(m, m.variable_names);
        for (const auto& lr : lrs) {
            std::printf("long run (on %s):", lr.normalization_variable.c_str());
            for (long i = 0; i < lr.coefficients.size(); ++i) {
                std::printf(" %s=%.4f", lr.variables[static_cast<std::size_t>(i)].c_str(),
                            lr.coefficients[i]);
            }
            std::printf("\n");
        }
        if (show_exo) {
            for (const auto& v : m.variable_names) {
                const WeakExogeneityResult w = weak_exogeneity_test(m, v);
                std::printf("weak exogeneity %-8s LR = %8.4f  df = %d  p = %.4f\n",
                            v.c_str(), w.lr_statistic, w.df, w.p_value);
            }
        }
        return 0;
    }

    if (cmd_gr->parsed()) {
        Dataset gd = gr_levels ? d : d.differenced();
        const std::string pre = gr_levels ? "" : "D";
        const GrangerResult g =
            granger_test(gd, pre + cause, pre + effect, gr_lag);
        std::printf("%s -> %s: F(%d, %d) = %.4f, p = %.4f\n", g.cause.c_str(),
                    g.effect.c_str(), g.df1, g.df2, g.statistic, g.p_value);
        return 0;
    }

    if (cmd_diag->parsed()) {
        const VecmModel m = fit_with_default_rank(dg_p, dg_r);
        const DiagnosticReport r = diagnose(m.residuals, dg_p, dg_h, dg_q);
        std::printf("portmanteau  Q = %10.4f  df = %4d  p = %.4f\n",
                    r.portmanteau.statistic, r.portmanteau.df, r.portmanteau.p_value);
        std::printf("jarque-bera  J = %10.4f  df = %4d  p = %.4f\n",
                    r.jarque_bera.statistic, r.jarque_bera.df, r.jarque_bera.p_value);
        std::printf("arch-lm      L = %10.4f  df = %4d  p = %.4f\n",
                    r.arch.statistic, r.arch.df, r.arch.p_value);
        return 0;
    }

    if (cmd_irf->parsed() || cmd_fevd->parsed()) {
        const VecmModel m = fit_with_default_rank(dy_p, dy_r);
        const auto names = m.variable_names;
        if (cmd_fevd->parsed()) {
            const FevdResult f = fevd(m, horizon, names);
            for (int v = 0; v < m.k; ++v) {
                std::printf("variance of %s explained by:\n", names[static_cast<std::size_t>(v)].c_str());
                std::printf("%4s", "h");
                for (const auto& n : names) std::printf(" %10s", n.c_str());
                std::printf("\n");
                for (int h = 0; h < horizon; ++h) {
                    std::printf("%4d", h + 1);
                    for (int j = 0; j < m.k; ++j) {
                        std::printf(" %10.4f", f.shares[static_cast<std::size_t>(h)](v, j));
                    }
                    std::printf("\n");
                }
            }
            return 0;
        }
        IrfResult ir = reps > 0 ? bootstrap_bands(m, horizon, names, reps, seed)
                                : irf(m, horizon, names);
        for (int j = 0; j < m.k; ++j) {
            for (int i = 0; i < m.k; ++i) {
                std::printf("%s -> %s:", names[static_cast<std::size_t>(j)].c_str(),
                            names[static_cast<std::size_t>(i)].c_str());
                for (int h = 0; h <= horizon; ++h) {
                    std::printf(" %.4f", ir.responses[static_cast<std::size_t>(h)](i, j));
                }
                std::printf("\n");
                if (ir.has_bands) {
                    std::printf("  95%% band:");
                    for (int h = 0; h <= horizon; ++h) {
                        std::printf(" [%.4f, %.4f]",
                                    ir.lower[static_cast<std::size_t>(h)](i, j),
                                    ir.upper[static_cast<std::size_t>(h)](i, j));
                    }
                    std::printf("\n");
                }
            }
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const econ::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
