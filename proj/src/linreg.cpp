#include "econ/linreg.hpp"

#include "econ/errors.hpp"

#include <cmath>
#include <numbers>

namespace econ {

OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X) {
    const long n = X.rows();
    const long p = X.cols();
    if (y.size() != n) {
        throw InvalidArgumentError("ols: y has " + std::to_string(y.size()) +
                                   " rows, X has " + std::to_string(n));
    }
    if (n <= p) {
        throw InsufficientDataError("ols: " + std::to_string(n) +
                                    " observations for " + std::to_string(p) +
                                    " parameters");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < p) {
        throw SingularDesignError("ols: design matrix is rank deficient (rank " +
                                  std::to_string(qr.rank()) + " of " +
                                  std::to_string(p) + ")");
    }
    OlsFit fit;
    fit.coefficients = qr.solve(y);
    fit.residuals = y - X * fit.coefficients;
    fit.rss = fit.residuals.squaredNorm();
    fit.n_obs = static_cast<int>(n);
    fit.n_params = static_cast<int>(p);
    fit.sigma2 = fit.rss / static_cast<double>(n - p);

    // (X'X)^{-1} from the R factor of the pivoted QR.
    Eigen::MatrixXd R = qr.matrixR().topLeftCorner(p, p)
                            .triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv = R.inverse();
    Eigen::MatrixXd xtx_inv_perm = Rinv * Rinv.transpose();
    Eigen::MatrixXd P = qr.colsPermutation();
    Eigen::MatrixXd xtx_inv = P * xtx_inv_perm * P.transpose();

    fit.std_errors = (xtx_inv.diagonal() * fit.sigma2).cwiseSqrt();
    fit.t_stats = Eigen::VectorXd::Zero(p);
    for (long j = 0; j < p; ++j) {
        if (fit.std_errors[j] > 0.0) {
            fit.t_stats[j] = fit.coefficients[j] / fit.std_errors[j];
        }
    }
    const double s2_ml = fit.rss / static_cast<double>(n);
    fit.log_likelihood =
        -0.5 * static_cast<double>(n) * (std::log(2.0 * std::numbers::pi) + std::log(s2_ml) + 1.0);
    return fit;
}

InfoCriteria info_criteria(const Eigen::MatrixXd& sigma, int n_obs,
                           int n_params_per_equation, int k) {
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("info_criteria: residual covariance is not positive definite");
    }
    double log_det = 0.0;
    for (long i = 0; i < sigma.rows(); ++i) {
        log_det += 2.0 * std::log(llt.matrixL()(i, i));
    }
    const double n = n_obs;
    const double m = n_params_per_equation;
    const double total = m * k; // parameters in the whole system
    InfoCriteria c{};
    c.aic = log_det + 2.0 * total / n;
    c.hq = log_det + 2.0 * std::log(std::log(n)) * total / n;
    c.sc = log_det + std::log(n) * total / n;
    c.fpe = std::pow((n + m) / (n - m), k) * std::exp(log_det);
    return c;
}

double gaussian_loglik(const Eigen::MatrixXd& sigma_ml, int n_obs, int k) {
    Eigen::LLT<Eigen::MatrixXd> llt(sigma_ml);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("gaussian_loglik: covariance is not positive definite");
    }
    double log_det = 0.0;
    for (long i = 0; i < sigma_ml.rows(); ++i) {
        log_det += 2.0 * std::log(llt.matrixL()(i, i));
    }
    const double n = n_obs;
    return -0.5 * n * (k * std::log(2.0 * std::numbers::pi) + log_det + k);
}

} // namespace econ
