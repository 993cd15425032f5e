#include "econ/diagnostics.hpp"

#include "econ/distributions.hpp"
#include "econ/errors.hpp"

#include <cmath>

namespace econ {

TestResult portmanteau(const Eigen::MatrixXd& residuals, int h, int p_levels) {
    const long N = residuals.rows();
    const long k = residuals.cols();
    if (h <= p_levels) {
        throw InvalidArgumentError("portmanteau: horizon must exceed the lag order");
    }
    if (N <= h + 1) {
        throw InsufficientDataError("portmanteau: horizon too large for sample");
    }
    const Eigen::MatrixXd C0 = residuals.transpose() * residuals / static_cast<double>(N);
    Eigen::LLT<Eigen::MatrixXd> llt(C0);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("portmanteau: singular residual covariance");
    }
    double q = 0.0;
    for (int j = 1; j <= h; ++j) {
        const Eigen::MatrixXd Cj = residuals.bottomRows(N - j).transpose() *
                                   residuals.topRows(N - j) / static_cast<double>(N);
        const Eigen::MatrixXd t1 = llt.solve(Cj);
        const Eigen::MatrixXd t2 = llt.solve(Cj.transpose());
        q += (t1.transpose() * t2.transpose()).trace() / static_cast<double>(N - j);
    }
    q *= static_cast<double>(N) * static_cast<double>(N);

    TestResult r;
    r.statistic = q;
    r.lags = h;
    r.df = static_cast<int>(k * k) * (h - p_levels);
    r.p_value = chi2_sf(q, r.df);
    return r;
}

TestResult jarque_bera(const Eigen::MatrixXd& residuals) {
    const long N = residuals.rows();
    const long k = residuals.cols();
    if (N < 4) {
        throw InsufficientDataError("jarque_bera: need at least 4 observations");
    }
    Eigen::MatrixXd E = residuals.rowwise() - residuals.colwise().mean();
    const Eigen::MatrixXd S = E.transpose() * E / static_cast<double>(N);
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("jarque_bera: singular residual covariance");
    }
    // standardize by the Cholesky factor
    Eigen::MatrixXd U = llt.matrixL().solve(E.transpose()).transpose();
    double s3 = 0.0;
    double s4 = 0.0;
    for (long j = 0; j < k; ++j) {
        const double b1 = U.col(j).array().cube().mean();
        const double b2 = U.col(j).array().pow(4).mean();
        s3 += b1 * b1;
        s4 += (b2 - 3.0) * (b2 - 3.0);
    }
    TestResult r;
    r.statistic = N * s3 / 6.0 + N * s4 / 24.0;
    r.df = static_cast<int>(2 * k);
    r.p_value = chi2_sf(r.statistic, r.df);
    return r;
}

TestResult arch_lm(const Eigen::MatrixXd& residuals, int q) {
    const long N = residuals.rows();
    const long k = residuals.cols();
    const long m = k * (k + 1) / 2;
    const long n = N - q;
    if (q < 1) {
        throw InvalidArgumentError("arch_lm: need at least one lag");
    }
    if (n <= q * m + 1) {
        throw InsufficientDataError("arch_lm: sample too short for " +
                                    std::to_string(q) + " lags of vech products");
    }
    // D(t) = vech(e_t e_t')
    Eigen::MatrixXd D(N, m);
    for (long t = 0; t < N; ++t) {
        long c = 0;
        for (long i = 0; i < k; ++i) {
            for (long j = 0; j <= i; ++j) {
                D(t, c++) = residuals(t, i) * residuals(t, j);
            }
        }
    }
    Eigen::MatrixXd Yt = D.bottomRows(n);
    Eigen::MatrixXd X(n, 1 + q * m);
    X.col(0).setOnes();
    for (int j = 1; j <= q; ++j) {
        X.middleCols(1 + (j - 1) * m, m) = D.middleRows(q - j, n);
    }
    Eigen::MatrixXd B = X.colPivHouseholderQr().solve(Yt);
    Eigen::MatrixXd R = Yt - X * B;
    const Eigen::MatrixXd omega = R.transpose() * R / static_cast<double>(n);
    Eigen::MatrixXd Yc = Yt.rowwise() - Yt.colwise().mean();
    const Eigen::MatrixXd omega0 = Yc.transpose() * Yc / static_cast<double>(n);
    const double r2 =
        1.0 - (omega * omega0.inverse()).trace() / static_cast<double>(m);

    TestResult r;
    r.statistic = 0.5 * n * static_cast<double>(k * (k + 1)) * r2;
    r.lags = q;
    r.df = static_cast<int>(q * m * m);
    r.p_value = chi2_sf(r.statistic, r.df);
    return r;
}

DiagnosticReport diagnose(const Eigen::MatrixXd& residuals, int p_levels,
                          int portmanteau_h, int arch_lags) {
    return DiagnosticReport{portmanteau(residuals, portmanteau_h, p_levels),
                            jarque_bera(residuals),
                            arch_lm(residuals, arch_lags)};
}

} // namespace econ
