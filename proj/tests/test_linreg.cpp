#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "econ/errors.hpp"
#include "econ/linreg.hpp"
#include "econ/simulate.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace econ;

namespace {

// Normal-equations oracle in extended precision: beta = (X'X)^{-1} X'y
// by Gauss-Jordan elimination over long double.
std::vector<long double> normal_equations(const Eigen::MatrixXd& X,
                                          const Eigen::VectorXd& y) {
    const int p = static_cast<int>(X.cols());
    const int n = static_cast<int>(X.rows());
    std::vector<std::vector<long double>> A(
        static_cast<std::size_t>(p),
        std::vector<long double>(static_cast<std::size_t>(p + 1), 0.0L));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            long double s = 0.0L;
            for (int t = 0; t < n; ++t) {
                s += static_cast<long double>(X(t, i)) * X(t, j);
            }
            A[i][j] = s;
        }
        long double s = 0.0L;
        for (int t = 0; t < n; ++t) {
            s += static_cast<long double>(X(t, i)) * y[t];
        }
        A[i][p] = s;
    }
    for (int c = 0; c < p; ++c) {
        int piv = c;
        for (int r = c + 1; r < p; ++r) {
            if (fabsl(A[r][c]) > fabsl(A[piv][c])) piv = r;
        }
        std::swap(A[c], A[piv]);
        for (int r = 0; r < p; ++r) {
            if (r == c) continue;
            const long double f = A[r][c] / A[c][c];
            for (int j = c; j <= p; ++j) A[r][j] -= f * A[c][j];
        }
    }
    std::vector<long double> beta(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) beta[static_cast<std::size_t>(i)] = A[i][p] / A[i][i];
    return beta;
}

} // namespace

TEST_CASE("OLS matches the extended-precision normal-equations oracle") {
    GaussianRng rng(12345);
    const int n = 60, p = 5;
    Eigen::MatrixXd X(n, p);
    X.col(0).setOnes();
    for (int t = 0; t < n; ++t) {
        for (int j = 1; j < p; ++j) X(t, j) = rng();
    }
    Eigen::VectorXd y(n);
    for (int t = 0; t < n; ++t) {
        y[t] = 1.5 + 0.8 * X(t, 1) - 2.0 * X(t, 2) + 0.1 * X(t, 3) + rng();
    }
    const OlsFit fit = ols(y, X);
    const auto oracle = normal_equations(X, y);
    for (int j = 0; j < p; ++j) {
        CHECK(fit.coefficients[j] ==
              doctest::Approx(static_cast<double>(oracle[static_cast<std::size_t>(j)]))
                  .epsilon(1e-8));
    }

    // residual identities
    long double rss = 0.0L;
    for (int t = 0; t < n; ++t) {
        long double f = 0.0L;
        for (int j = 0; j < p; ++j) f += oracle[static_cast<std::size_t>(j)] * X(t, j);
        rss += (y[t] - f) * (y[t] - f);
    }
    CHECK(fit.rss == doctest::Approx(static_cast<double>(rss)).epsilon(1e-8));
    CHECK(fit.sigma2 == doctest::Approx(fit.rss / (n - p)));
    CHECK(fit.n_obs == n);
    CHECK(fit.n_params == p);
    // X'e = 0
    CHECK((X.transpose() * fit.residuals).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("standard errors and t-ratios follow the classical formulas") {
    GaussianRng rng(7);
    const int n = 40;
    Eigen::MatrixXd X(n, 2);
    X.col(0).setOnes();
    for (int t = 0; t < n; ++t) X(t, 1) = rng();
    Eigen::VectorXd y(n);
    for (int t = 0; t < n; ++t) y[t] = 2.0 + 0.5 * X(t, 1) + 0.3 * rng();

    const OlsFit fit = ols(y, X);
    const Eigen::MatrixXd xtx_inv = (X.transpose() * X).inverse();
    for (int j = 0; j < 2; ++j) {
        CHECK(fit.std_errors[j] ==
              doctest::Approx(std::sqrt(fit.sigma2 * xtx_inv(j, j))).epsilon(1e-10));
        CHECK(fit.t_stats[j] ==
              doctest::Approx(fit.coefficients[j] / fit.std_errors[j]));
    }
}

TEST_CASE("rank-deficient designs are rejected") {
    Eigen::MatrixXd X(10, 3);
    GaussianRng rng(3);
    for (int t = 0; t < 10; ++t) {
        X(t, 0) = 1.0;
        X(t, 1) = rng();
        X(t, 2) = 2.0 * X(t, 1); // exact collinearity
    }
    Eigen::VectorXd y = Eigen::VectorXd::Ones(10);
    CHECK_THROWS_AS(ols(y, X), SingularDesignError);
    CHECK_THROWS_AS(ols(Eigen::VectorXd::Ones(2), Eigen::MatrixXd::Ones(2, 3)),
                    InsufficientDataError);
}

TEST_CASE("information criteria follow the stated formulas") {
    Eigen::MatrixXd sigma(2, 2);
    sigma << 0.5, 0.1, 0.1, 0.3;
    const int n = 48, m = 5, k = 2;
    const InfoCriteria c = info_criteria(sigma, n, m, k);
    const double ld = std::log(sigma.determinant());
    CHECK(c.aic == doctest::Approx(ld + 2.0 * m * k / n).epsilon(1e-12));
    CHECK(c.hq == doctest::Approx(ld + 2.0 * std::log(std::log(n)) * m * k / n)
                      .epsilon(1e-12));
    CHECK(c.sc == doctest::Approx(ld + std::log(static_cast<double>(n)) * m * k / n)
                      .epsilon(1e-12));
    CHECK(c.fpe ==
          doctest::Approx(std::pow((n + m) / static_cast<double>(n - m), k) *
                          sigma.determinant())
              .epsilon(1e-12));
}

TEST_CASE("gaussian log-likelihood matches the closed form") {
    Eigen::MatrixXd sigma(2, 2);
    sigma << 1.0, 0.2, 0.2, 2.0;
    const int n = 30, k = 2;
    const double expected =
        -0.5 * n * (k * std::log(2.0 * std::numbers::pi) +
                    std::log(sigma.determinant()) + k);
    CHECK(gaussian_loglik(sigma, n, k) == doctest::Approx(expected).epsilon(1e-12));
}
