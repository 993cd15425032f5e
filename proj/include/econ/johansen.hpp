#pragma once

#include "econ/dataset.hpp"

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace econ {

/// Deterministic term placement in the Johansen procedure.
enum class DetCase {
    None,                 // no deterministic terms
    RestrictedConstant,   // constant inside the cointegrating relation
    UnrestrictedConstant, // constant in the short-run dynamics
};

std::string to_string(DetCase c);
DetCase det_case_from_string(const std::string& s);

struct JohansenResult {
    Eigen::VectorXd eigenvalues;       // descending, in [0,1)
    Eigen::VectorXd eigen_stats;       // -N ln(1 - lambda_r)
    Eigen::VectorXd trace_stats;       // -N sum_{i>=r} ln(1 - lambda_i)
    Eigen::VectorXd crit_eigen_5pct;   // per hypothesized rank r
    Eigen::VectorXd crit_trace_5pct;
    int decided_rank = 0;              // smallest r not rejected (trace)
    int decided_rank_eigen = 0;
    int lags = 0;                      // VAR lag order in levels
    DetCase det_case = DetCase::RestrictedConstant;
    Eigen::MatrixXd eigenvectors;      // candidate beta columns
    int n_obs = 0;                     // effective sample N = T - lags

    // Product-moment pieces retained for downstream estimation.
    Eigen::MatrixXd Z0; // N x k, differenced observations
    Eigen::MatrixXd Z1; // N x (k (p-1) [+1]), lagged differences (+ const)
    Eigen::MatrixXd ZK; // N x k [+1], lagged levels (+ restricted const)
    Eigen::MatrixXd R0, RK;
    Eigen::MatrixXd S00, S0K, SKK;
    Eigen::MatrixXd levels; // full T x k level sample the test was run on
    std::vector<std::string> variable_names;
};

/// Generalized eigenproblem |lambda S11 - S10 S00^{-1} S01| = 0 via
/// Cholesky reduction of S11. Eigenvectors satisfy V' S11 V = I.
void eigen_problem(const Eigen::MatrixXd& S00, const Eigen::MatrixXd& S01,
                   const Eigen::MatrixXd& S11, Eigen::VectorXd& eigenvalues,
                   Eigen::MatrixXd& eigenvectors);

/// Johansen cointegration rank test, reduced-rank regression with lag-K
/// levels term (p = VAR order in levels, p-1 differenced lags).
JohansenResult johansen_test(const Dataset& d, int p,
                             DetCase det_case = DetCase::RestrictedConstant);

/// 5% critical value for the trace (or max-eigen) statistic with k-r
/// common trends under the given deterministic case.
double johansen_critical_trace(int k_minus_r, DetCase c);
double johansen_critical_eigen(int k_minus_r, DetCase c);

} // namespace econ
