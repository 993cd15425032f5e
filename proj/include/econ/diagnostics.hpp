#pragma once

#include <Eigen/Dense>

namespace econ {

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    int df = 0;
    int lags = 0;
};

/// Multivariate Ljung-Box-adjusted portmanteau test on residuals up to
/// horizon h; degrees of freedom k^2 (h - p_levels).
TestResult portmanteau(const Eigen::MatrixXd& residuals, int h, int p_levels);

/// Multivariate Jarque-Bera on Cholesky-standardized residuals,
/// chi-square with 2k degrees of freedom.
TestResult jarque_bera(const Eigen::MatrixXd& residuals);

/// Multivariate ARCH-LM: vech(e e') regressed on q lags of itself;
/// chi-square with q (k(k+1)/2)^2 degrees of freedom.
TestResult arch_lm(const Eigen::MatrixXd& residuals, int q);

struct DiagnosticReport {
    TestResult portmanteau;
    TestResult jarque_bera;
    TestResult arch;
};

DiagnosticReport diagnose(const Eigen::MatrixXd& residuals, int p_levels,
                          int portmanteau_h = 10, int arch_lags = 5);

} // namespace econ
