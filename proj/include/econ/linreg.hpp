#pragma once

#include <Eigen/Dense>

namespace econ {

/// Ordinary least squares fit. Solved by column-pivoted Householder QR.
struct OlsFit {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd std_errors;
    Eigen::VectorXd t_stats;
    Eigen::VectorXd residuals;
    double rss = 0.0;
    double sigma2 = 0.0; // rss / (n - p)
    int n_obs = 0;
    int n_params = 0;
    double log_likelihood = 0.0; // Gaussian, constant included
};

OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X);

/// Multivariate information criteria (VAR lag-selection convention):
///   AIC = ln|S| + 2 m k / n,  HQ = ln|S| + 2 ln(ln n) m k / n,
///   SC  = ln|S| + ln(n) m k / n,  FPE = ((n+m)/(n-m))^k |S|
/// with S the ML residual covariance, n the estimation sample,
/// m the parameters per equation and k the system dimension.
struct InfoCriteria {
    double aic;
    double hq;
    double sc;
    double fpe;
};

InfoCriteria info_criteria(const Eigen::MatrixXd& sigma, int n_obs,
                           int n_params_per_equation, int k);

/// Gaussian system log-likelihood from the ML residual covariance.
double gaussian_loglik(const Eigen::MatrixXd& sigma_ml, int n_obs, int k);

} // namespace econ
