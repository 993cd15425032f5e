#include "econ/johansen.hpp"

#include "econ/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace econ {

namespace {

// Osterwald-Lenum (1992) 5% critical values by number of common trends
// (k - r = 1..10) for the supported deterministic cases.
constexpr std::array<double, 10> kTraceNone = {
    3.76, 12.53, 24.31, 39.89, 59.46, 82.49, 109.99, 141.20, 175.77, 212.67};
constexpr std::array<double, 10> kEigenNone = {
    3.76, 11.44, 17.89, 23.80, 30.04, 36.36, 41.51, 47.99, 53.69, 59.06};
constexpr std::array<double, 10> kTraceRC = {
    9.24, 19.96, 34.91, 53.12, 76.07, 102.14, 131.70, 165.58, 202.92, 244.15};
constexpr std::array<double, 10> kEigenRC = {
    9.24, 15.67, 22.00, 28.14, 34.40, 40.30, 46.45, 52.00, 57.42, 63.57};
constexpr std::array<double, 10> kTraceUC = {
    3.84, 15.41, 29.68, 47.21, 68.52, 94.15, 124.24, 156.00, 192.89, 233.13};
constexpr std::array<double, 10> kEigenUC = {
    3.84, 14.07, 20.97, 27.07, 33.46, 39.37, 45.28, 51.42, 57.12, 62.81};

const std::array<double, 10>& trace_table(DetCase c) {
    switch (c) {
        case DetCase::None: return kTraceNone;
        case DetCase::RestrictedConstant: return kTraceRC;
        case DetCase::UnrestrictedConstant: return kTraceUC;
    }
    return kTraceRC;
}

const std::array<double, 10>& eigen_table(DetCase c) {
    switch (c) {
        case DetCase::None: return kEigenNone;
        case DetCase::RestrictedConstant: return kEigenRC;
        case DetCase::UnrestrictedConstant: return kEigenUC;
    }
    return kEigenRC;
}

Eigen::MatrixXd project_out(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& W) {
    if (W.cols() == 0) return Z;
    Eigen::MatrixXd B = W.colPivHouseholderQr().solve(Z);
    return Z - W * B;
}

} // namespace

std::string to_string(DetCase c) {
    switch (c) {
        case DetCase::None: return "none";
        case DetCase::RestrictedConstant: return "restricted-constant";
        case DetCase::UnrestrictedConstant: return "unrestricted-constant";
    }
    return "restricted-constant";
}

DetCase det_case_from_string(const std::string& s) {
    if (s == "none") return DetCase::None;
    if (s == "restricted-constant" || s == "const") return DetCase::RestrictedConstant;
    if (s == "unrestricted-constant" || s == "drift") return DetCase::UnrestrictedConstant;
    throw InvalidArgumentError("unknown deterministic case '" + s + "'");
}

double johansen_critical_trace(int k_minus_r, DetCase c) {
    if (k_minus_r < 1 || k_minus_r > 10) {
        throw InvalidArgumentError("johansen critical values tabulated for k-r in 1..10");
    }
    return trace_table(c)[static_cast<std::size_t>(k_minus_r - 1)];
}

double johansen_critical_eigen(int k_minus_r, DetCase c) {
    if (k_minus_r < 1 || k_minus_r > 10) {
        throw InvalidArgumentError("johansen critical values tabulated for k-r in 1..10");
    }
    return eigen_table(c)[static_cast<std::size_t>(k_minus_r - 1)];
}

void eigen_problem(const Eigen::MatrixXd& S00, const Eigen::MatrixXd& S01,
                   const Eigen::MatrixXd& S11, Eigen::VectorXd& eigenvalues,
                   Eigen::MatrixXd& eigenvectors) {
    Eigen::LLT<Eigen::MatrixXd> llt11(S11);
    Eigen::LLT<Eigen::MatrixXd> llt00(S00);
    if (llt11.info() != Eigen::Success || llt00.info() != Eigen::Success) {
        throw NumericalError("eigen_problem: product-moment matrix not positive definite");
    }
    const Eigen::MatrixXd L = llt11.matrixL();
    // M = L^{-1} S10 S00^{-1} S01 L^{-T}, symmetric
    Eigen::MatrixXd S10 = S01.transpose();
    Eigen::MatrixXd mid = llt00.solve(S01);       // S00^{-1} S01
    Eigen::MatrixXd M = S10 * mid;                // S10 S00^{-1} S01
    M = L.triangularView<Eigen::Lower>().solve(M);
    M = L.triangularView<Eigen::Lower>().solve(M.transpose()).transpose();
    M = 0.5 * (M + M.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    if (es.info() != Eigen::Success) {
        throw NumericalError("eigen_problem: eigensolver failed");
    }
    const long n = M.rows();
    eigenvalues.resize(n);
    eigenvectors.resize(n, n);
    // SelfAdjointEigenSolver returns ascending order; reverse to descending
    for (long i = 0; i < n; ++i) {
        eigenvalues[i] = std::clamp(es.eigenvalues()[n - 1 - i], 0.0, 1.0 - 1e-15);
        eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
    }
    // back-transform: V = L^{-T} W so that V' S11 V = I
    eigenvectors = L.triangularView<Eigen::Lower>()
                       .transpose()
                       .solve(eigenvectors);
}

JohansenResult johansen_test(const Dataset& d, int p, DetCase det_case) {
    const Eigen::MatrixXd Y = d.matrix();
    const int T = static_cast<int>(Y.rows());
    const int k = static_cast<int>(Y.cols());
    if (k < 2) {
        throw InvalidArgumentError("johansen_test: need at least 2 series");
    }
    if (p < 1) {
        throw InvalidArgumentError("johansen_test: lag order must be >= 1");
    }
    const int N = T - p;
    if (N <= k * p + 2) {
        throw InsufficientDataError("johansen_test: sample too small for lag " +
                                    std::to_string(p));
    }
    if (k > 10) {
        throw InvalidArgumentError("johansen_test: critical values tabulated up to k = 10");
    }

    Eigen::MatrixXd dY = Y.bottomRows(T - 1) - Y.topRows(T - 1);
    JohansenResult res;
    res.Z0 = dY.bottomRows(N); // dy_t, t = p..T-1

    const bool unrestricted_const = det_case == DetCase::UnrestrictedConstant;
    const int z1_cols = k * (p - 1) + (unrestricted_const ? 1 : 0);
    res.Z1.resize(N, z1_cols);
    long c = 0;
    for (int j = 1; j < p; ++j) {
        res.Z1.middleCols(c, k) = dY.middleRows(p - 1 - j, N);
        c += k;
    }
    if (unrestricted_const) res.Z1.col(c).setOnes();

    const bool restricted_const = det_case == DetCase::RestrictedConstant;
    res.ZK.resize(N, k + (restricted_const ? 1 : 0));
    res.ZK.leftCols(k) = Y.topRows(N); // y_{t-p}
    if (restricted_const) res.ZK.col(k).setOnes();

    res.R0 = project_out(res.Z0, res.Z1);
    res.RK = project_out(res.ZK, res.Z1);
    res.S00 = res.R0.transpose() * res.R0 / static_cast<double>(N);
    res.SKK = res.RK.transpose() * res.RK / static_cast<double>(N);
    res.S0K = res.R0.transpose() * res.RK / static_cast<double>(N);

    eigen_problem(res.S00, res.S0K, res.SKK, res.eigenvalues, res.eigenvectors);

    res.lags = p;
    res.det_case = det_case;
    res.n_obs = N;
    res.variable_names = d.names();
    res.levels = d.matrix();

    res.eigen_stats.resize(k);
    res.trace_stats.resize(k);
    res.crit_eigen_5pct.resize(k);
    res.crit_trace_5pct.resize(k);
    for (int r = 0; r < k; ++r) {
        res.eigen_stats[r] = -N * std::log1p(-res.eigenvalues[r]);
    }
    // exact recurrence: trace[r] = eigen[r] + trace[r+1]
    double acc = 0.0;
    for (int r = k - 1; r >= 0; --r) {
        acc = res.eigen_stats[r] + acc;
        res.trace_stats[r] = acc;
    }
    for (int r = 0; r < k; ++r) {
        res.crit_trace_5pct[r] = johansen_critical_trace(k - r, det_case);
        res.crit_eigen_5pct[r] = johansen_critical_eigen(k - r, det_case);
    }
    res.decided_rank = k;
    for (int r = 0; r < k; ++r) {
        if (res.trace_stats[r] < res.crit_trace_5pct[r]) {
            res.decided_rank = r;
            break;
        }
    }
    res.decided_rank_eigen = k;
    for (int r = 0; r < k; ++r) {
        if (res.eigen_stats[r] < res.crit_eigen_5pct[r]) {
            res.decided_rank_eigen = r;
            break;
        }
    }
    return res;
}

} // namespace econ
