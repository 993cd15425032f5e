#pragma once

#include "econ/johansen.hpp"
#include "econ/varmodel.hpp"

#include <Eigen/Dense>
#include <string>
#include <tuple>
#include <vector>

namespace econ {

/// Vector error correction model estimated by the two-step Johansen
/// procedure: beta from the eigenproblem, then equation-wise OLS of the
/// differences on the error-correction terms and lagged differences.
struct VecmModel {
    int k = 0;
    int p_diff = 0;            // differenced lags (p_levels - 1)
    int r = 0;                 // cointegrating rank
    DetCase det_case = DetCase::RestrictedConstant;
    Eigen::MatrixXd alpha;     // k x r adjustment loadings
    Eigen::MatrixXd beta;      // k (+1 restricted const) x r
    std::vector<Eigen::MatrixXd> gamma; // p_diff short-run matrices, k x k
    Eigen::VectorXd intercepts;         // k (zero for restricted const)
    Eigen::MatrixXd residuals;          // N x k
    Eigen::MatrixXd sigma;              // k x k, ML divisor N
    double log_likelihood = 0.0;
    Eigen::MatrixXd ect_series;         // N x r, beta' [y_{t-p}; 1]

    // Standard errors / t-stats / p-values per coefficient, organized as
    // (r + k p_diff [+1]) x k blocks matching the stacked regressors
    // [ECT..., dY lags..., (const)].
    Eigen::MatrixXd coef;     // stacked regressor coefficients
    Eigen::MatrixXd std_err;
    Eigen::MatrixXd t_stats;
    Eigen::MatrixXd p_values;

    std::vector<std::string> variable_names;
    Eigen::MatrixXd levels;   // original T x k level data (for bootstrap)
    int n_obs = 0;

    Eigen::MatrixXd pi() const { return alpha * beta.topRows(k).transpose(); }
};

VecmModel fit_vecm(const Dataset& d, int p_levels, int r,
                   DetCase det_case = DetCase::RestrictedConstant);

/// Refit with a precomputed Johansen result (shares the eigenproblem).
VecmModel fit_vecm(const JohansenResult& joh, int r);

struct WeakExogeneityResult {
    std::string variable;
    double lr_statistic = 0.0;
    double p_value = 1.0;
    int df = 0;
    bool weakly_exogenous_at_10pct = false;
};

/// LR test that the variable's adjustment row is zero, via the restricted
/// reduced-rank eigenproblem.
WeakExogeneityResult weak_exogeneity_test(const VecmModel& m,
                                          const std::string& variable);

struct LongRunVector {
    std::vector<std::string> variables; // includes "const" when restricted
    Eigen::VectorXd coefficients;       // normalized, leading block identity
    std::string normalization_variable;
};

/// Phillips normalization under the given variable ordering.
std::vector<LongRunVector> normalize_long_run(const VecmModel& m,
                                              const std::vector<std::string>& ordering);

struct RestrictedChain {
    LagSelection lag_selection;
    JohansenResult johansen;
    VecmModel model;
};

/// Re-runs lag selection, the Johansen test and the VECM on a column
/// subset (rank from the subset's own trace test unless fixed_rank >= 0).
RestrictedChain restrict_to_subset(const Dataset& d,
                                   const std::vector<std::string>& keep,
                                   int p_levels, DetCase det_case,
                                   int fixed_rank = -1);

} // namespace econ
