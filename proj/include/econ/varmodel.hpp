#pragma once

#include "econ/dataset.hpp"
#include "econ/linreg.hpp"

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace econ {

/// Level (or difference) VAR(p) fitted equation-by-equation.
struct VarModel {
    int k = 0;
    int p = 0;
    Eigen::VectorXd intercepts;                 // k (zero when absent)
    std::vector<Eigen::MatrixXd> lag_coefficients; // p matrices, k x k
    Eigen::MatrixXd residuals;                  // (T - p) x k
    Eigen::MatrixXd sigma;                      // k x k, divisor T - p
    double log_likelihood = 0.0;
    std::vector<std::string> variable_names;
    bool has_intercept = true;

    /// Companion matrix (k*p x k*p) of the lag polynomial.
    Eigen::MatrixXd companion() const;
    /// One-step fitted values for the estimation sample.
    Eigen::MatrixXd fitted(const Eigen::MatrixXd& levels) const;
};

VarModel fit_var(const Dataset& d, int p, bool include_intercept = true,
                 int sample_start = -1);

struct LagSelection {
    struct Row {
        int lag;
        InfoCriteria criteria;
    };
    std::vector<Row> table;
    std::map<std::string, int> chosen_lag_per_criterion; // AIC/HQ/SC/FPE
    int recommended = 1; // modal choice, ties toward the smaller lag
};

LagSelection select_lag_order(const Dataset& d, int max_lag);

struct GrangerResult {
    std::string cause;
    std::string effect;
    int lag = 0;
    double statistic = 0.0; // F
    double p_value = 1.0;
    bool reject_at_5pct = false;
    int df1 = 0;
    int df2 = 0;
};

/// Bivariate Granger F-test of `cause` not causing `effect`.
GrangerResult granger_test(const Dataset& d, const std::string& cause,
                           const std::string& effect, int lag);

} // namespace econ
