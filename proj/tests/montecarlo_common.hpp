// Shared Monte Carlo experiments: exercised by the statistical test
// binary and re-used verbatim by the acceptance gate.
#pragma once

#include "econ/dynamics.hpp"
#include "econ/johansen.hpp"
#include "econ/simulate.hpp"
#include "econ/unitroot.hpp"
#include "econ/varmodel.hpp"
#include "econ/diagnostics.hpp"
#include "econ/errors.hpp"
#include "econ/vecm.hpp"

#include <atomic>
#include <cstdint>

namespace mc {

using namespace econ;

struct UnitRootRates {
    double adf_size, pp_size, adf_power, pp_power;
};

inline UnitRootRates unit_root_rates(int trials = 2000, int T = 200) {
    std::atomic<int> adf0{0}, pp0{0}, adf1{0}, pp1{0};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        DgpSpec rw;
        rw.kind = DgpKind::RandomWalk;
        rw.T = T;
        rw.k = 1;
        rw.seed = derive_seed(1000, static_cast<std::uint64_t>(i));
        const Series s = generate(rw).at(0);
        if (adf_test(s, Deterministic::Drift, 3).reject_at_5pct) ++adf0;
        if (pp_test(s, Deterministic::Drift).reject_at_5pct) ++pp0;

        DgpSpec ar;
        ar.kind = DgpKind::Ar1;
        ar.T = T;
        ar.k = 1;
        ar.seed = derive_seed(2000, static_cast<std::uint64_t>(i));
        ar.ar_coefficient = 0.5;
        const Series a = generate(ar).at(0);
        if (adf_test(a, Deterministic::Drift, 3).reject_at_5pct) ++adf1;
        if (pp_test(a, Deterministic::Drift).reject_at_5pct) ++pp1;
    }
    const double n = trials;
    return {adf0 / n, pp0 / n, adf1 / n, pp1 / n};
}

struct RankRates {
    double rank0, rank1;
};

inline RankRates johansen_rank_rates(int trials = 500, int T = 500) {
    std::atomic<int> hit0{0}, hit1{0};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        DgpSpec rw;
        rw.kind = DgpKind::RandomWalk;
        rw.T = T;
        rw.k = 3;
        rw.seed = derive_seed(3000, static_cast<std::uint64_t>(i));
        if (johansen_test(generate(rw), 2, DetCase::RestrictedConstant)
                .decided_rank == 0) {
            ++hit0;
        }

        // known rank-1 VECM DGP
        DgpSpec one;
        one.kind = DgpKind::Vecm;
        one.T = 2000;
        one.k = 2;
        one.seed = derive_seed(4000, static_cast<std::uint64_t>(i));
        one.alpha = Eigen::MatrixXd(2, 1);
        one.alpha << -0.5, 0.1;
        one.beta = Eigen::MatrixXd(2, 1);
        one.beta << 1.0, -1.0;
        if (johansen_test(generate(one), 2, DetCase::RestrictedConstant)
                .decided_rank == 1) {
            ++hit1;
        }
    }
    return {hit0 / static_cast<double>(trials), hit1 / static_cast<double>(trials)};
}

struct GrangerRates {
    double size;
    double power_p; // p-value on a strongly causal fixture
};

inline GrangerRates granger_rates(int trials = 2000, int T = 100) {
    std::atomic<int> rej{0};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        DgpSpec wn;
        wn.kind = DgpKind::WhiteNoise;
        wn.T = T;
        wn.k = 2;
        wn.seed = derive_seed(6000, static_cast<std::uint64_t>(i));
        if (granger_test(generate(wn), "y1", "y2", 2).reject_at_5pct) ++rej;
    }

    DgpSpec var;
    var.kind = DgpKind::Var;
    var.T = 500;
    var.k = 2;
    var.seed = 7000;
    Eigen::MatrixXd A(2, 2);
    A << 0.5, 0.0, 0.4, 0.3;
    var.var_coefficients = {A};
    const double p = granger_test(generate(var), "y1", "y2", 2).p_value;
    return {rej / static_cast<double>(trials), p};
}

struct DiagnosticRates {
    double portmanteau_size, jb_size, arch_size, arch_power;
};

inline DiagnosticRates diagnostic_rates(int pt_trials = 2000, int jb_trials = 2000,
                                        int arch_trials = 1000) {
    std::atomic<int> pt{0}, jb{0}, arch0{0}, arch1{0};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < pt_trials; ++i) {
        DgpSpec wn;
        wn.kind = DgpKind::WhiteNoise;
        wn.T = 500;
        wn.k = 2;
        wn.seed = derive_seed(8000, static_cast<std::uint64_t>(i));
        if (portmanteau(generate(wn).matrix(), 10, 0).p_value < 0.05) ++pt;
    }
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < jb_trials; ++i) {
        DgpSpec wn;
        wn.kind = DgpKind::WhiteNoise;
        wn.T = 1000;
        wn.k = 2;
        wn.seed = derive_seed(9000, static_cast<std::uint64_t>(i));
        if (jarque_bera(generate(wn).matrix()).p_value < 0.05) ++jb;
    }
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < arch_trials; ++i) {
        DgpSpec wn;
        wn.kind = DgpKind::WhiteNoise;
        wn.T = 300;
        wn.k = 2;
        wn.seed = derive_seed(10000, static_cast<std::uint64_t>(i));
        if (arch_lm(generate(wn).matrix(), 5).p_value < 0.05) ++arch0;

        DgpSpec ah;
        ah.kind = DgpKind::Arch1;
        ah.T = 300;
        ah.k = 2;
        ah.seed = derive_seed(11000, static_cast<std::uint64_t>(i));
        ah.arch_alpha = 0.6;
        if (arch_lm(generate(ah).matrix(), 5).p_value < 0.05) ++arch1;
    }
    return {pt / static_cast<double>(pt_trials), jb / static_cast<double>(jb_trials),
            arch0 / static_cast<double>(arch_trials),
            arch1 / static_cast<double>(arch_trials)};
}

// Pointwise coverage of nominal 95% bootstrap bands around the true IRF
// of a known VECM DGP.
inline double bootstrap_coverage(int trials = 200, int T = 500,
                                 int replications = 199, int H = 5) {
    Eigen::MatrixXd alpha(2, 1), beta(2, 1);
    alpha << -0.4, 0.1;
    beta << 1.0, -1.0;
    const Eigen::MatrixXd A1 =
        Eigen::MatrixXd::Identity(2, 2) + alpha * beta.transpose();

    // true orthogonalized responses (sigma = I): theta_h = A1^h
    std::vector<Eigen::MatrixXd> truth;
    Eigen::MatrixXd Ap = Eigen::MatrixXd::Identity(2, 2);
    for (int h = 0; h <= H; ++h) {
        truth.push_back(Ap);
        Ap = A1 * Ap;
    }

    std::atomic<long> covered{0}, total{0};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        DgpSpec spec;
        spec.kind = DgpKind::Vecm;
        spec.T = T;
        spec.k = 2;
        spec.seed = derive_seed(12000, static_cast<std::uint64_t>(i));
        spec.alpha = alpha;
        spec.beta = beta;
        const Dataset d = generate(spec);
        try {
            const VecmModel m = fit_vecm(d, 2, 1);
            const IrfResult r =
                bootstrap_bands(m, H, m.variable_names, replications,
                                derive_seed(13000, static_cast<std::uint64_t>(i)),
                                0.95, false);
            for (int h = 1; h <= H; ++h) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        const double t =
                            truth[static_cast<std::size_t>(h)](a, b);
                        ++total;
                        if (t >= r.lower[static_cast<std::size_t>(h)](a, b) &&
                            t <= r.upper[static_cast<std::size_t>(h)](a, b)) {
                            ++covered;
                        }
                    }
                }
            }
        } catch (const Error&) {
            // a failed trial contributes nothing
        }
    }
    return total > 0 ? covered / static_cast<double>(total) : 0.0;
}

} // namespace mc
