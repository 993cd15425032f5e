#include "econ/vecm.hpp"

#include "econ/distributions.hpp"
#include "econ/errors.hpp"
#include "econ/linreg.hpp"

#include <algorithm>
#include <cmath>

namespace econ {

namespace {

VecmModel estimate_from_johansen(const JohansenResult& joh, int r,
                                 const Eigen::MatrixXd& levels) {
    const int k = static_cast<int>(joh.Z0.cols());
    const int N = joh.n_obs;
    if (r <= 0) {
        throw InvalidArgumentError(
            "fit_vecm: rank 0 means no cointegration; estimate a VAR in "
            "first differences instead");
    }
    if (r >= k) {
        throw InvalidArgumentError(
            "fit_vecm: rank k implies a stationary system; estimate a level "
            "VAR instead");
    }

    // Phillips normalization: leading r x r block of beta = identity.
    Eigen::MatrixXd B = joh.eigenvectors.leftCols(r);
    Eigen::MatrixXd lead = B.topRows(r);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lead);
    if (!lu.isInvertible()) {
        throw NumericalError("fit_vecm: leading beta block is singular; "
                             "reorder the variables");
    }
    Eigen::MatrixXd beta = B * lu.inverse();

    VecmModel m;
    m.k = k;
    m.p_diff = joh.lags - 1;
    m.r = r;
    m.det_case = joh.det_case;
    m.variable_names = joh.variable_names;
    m.levels = levels;
    m.n_obs = N;
    m.beta = beta;
    m.ect_series = joh.ZK * beta; // N x r

    const int z1_cols = static_cast<int>(joh.Z1.cols());
    Eigen::MatrixXd X(N, r + z1_cols);
    X.leftCols(r) = m.ect_series;
    if (z1_cols > 0) X.rightCols(z1_cols) = joh.Z1;

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < X.cols()) {
        throw SingularDesignError("fit_vecm: collinear regressors");
    }
    m.coef = qr.solve(joh.Z0);               // (r + z1) x k
    m.residuals = joh.Z0 - X * m.coef;
    m.sigma = m.residuals.transpose() * m.residuals / static_cast<double>(N);
    m.log_likelihood = gaussian_loglik(m.sigma, N, k);

    const int npar = static_cast<int>(X.cols());
    Eigen::MatrixXd R = qr.matrixR()
                            .topLeftCorner(npar, npar)
                            .triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv = R.inverse();
    Eigen::MatrixXd xtx_inv_perm = Rinv * Rinv.transpose();
    Eigen::MatrixXd P = qr.colsPermutation();
    Eigen::VectorXd xtx_diag = (P * xtx_inv_perm * P.transpose()).diagonal();

    m.std_err.resize(npar, k);
    m.t_stats.resize(npar, k);
    m.p_values.resize(npar, k);
    const double df = N - npar;
    for (int e = 0; e < k; ++e) {
        const double s2 = m.residuals.col(e).squaredNorm() / df;
        for (int i = 0; i < npar; ++i) {
            m.std_err(i, e) = std::sqrt(xtx_diag[i] * s2);
            m.t_stats(i, e) = m.coef(i, e) / m.std_err(i, e);
            m.p_values(i, e) = t_sf_2sided(m.t_stats(i, e), df);
        }
    }

    m.alpha = m.coef.topRows(r).transpose(); // k x r
    const bool unrestricted_const = joh.det_case == DetCase::UnrestrictedConstant;
    for (int j = 0; j < m.p_diff; ++j) {
        m.gamma.push_back(m.coef.middleRows(r + j * k, k).transpose());
    }
    m.intercepts = Eigen::VectorXd::Zero(k);
    if (unrestricted_const) {
        m.intercepts = m.coef.row(r + m.p_diff * k).transpose();
    }
    return m;
}

} // namespace

VecmModel fit_vecm(const JohansenResult& joh, int r) {
    return estimate_from_johansen(joh, r, joh.levels);
}

VecmModel fit_vecm(const Dataset& d, int p_levels, int r, DetCase det_case) {
    if (p_levels < 2) {
        throw InvalidArgumentError("fit_vecm: p_levels must be >= 2");
    }
    const JohansenResult joh = johansen_test(d, p_levels, det_case);
    return estimate_from_johansen(joh, r, d.matrix());
}

WeakExogeneityResult weak_exogeneity_test(const VecmModel& m,
                                          const std::string& variable) {
    const auto it = std::find(m.variable_names.begin(), m.variable_names.end(),
                              variable);
    if (it == m.variable_names.end()) {
        throw InvalidArgumentError("weak_exogeneity_test: no variable '" +
                                   variable + "'");
    }
    const int j = static_cast<int>(it - m.variable_names.begin());
    const int k = m.k;
    const int N = m.n_obs;
    if (m.levels.size() == 0) {
        throw InvalidArgumentError("weak_exogeneity_test: model lacks level data");
    }
    const Dataset d = Dataset::from_matrix(m.levels, m.variable_names);
    const JohansenResult joh = johansen_test(d, m.p_diff + 1, m.det_case);

    // Johansen's restricted eigenproblem for alpha = A psi with A the
    // complement of e_j: correct the residuals, then reduce over A.
    Eigen::MatrixXd A(k, k - 1);
    {
        int c = 0;
        for (int i = 0; i < k; ++i) {
            if (i == j) continue;
            A.col(c++) = Eigen::VectorXd::Unit(k, i);
        }
    }
    const Eigen::VectorXd ap = Eigen::VectorXd::Unit(k, j);
    const double app = ap.dot(joh.S00 * ap);
    const Eigen::MatrixXd Mp = ap * ap.transpose() / app;

    const Eigen::MatrixXd Rt0 = joh.R0 - joh.R0 * Mp * joh.S00;
    const Eigen::MatrixXd RtK = joh.RK - joh.R0 * Mp * joh.S0K;
    const Eigen::MatrixXd St00 = Rt0.transpose() * Rt0 / static_cast<double>(N);
    const Eigen::MatrixXd StKK = RtK.transpose() * RtK / static_cast<double>(N);
    const Eigen::MatrixXd St0K = Rt0.transpose() * RtK / static_cast<double>(N);

    const Eigen::MatrixXd S00aa = A.transpose() * St00 * A;
    Eigen::VectorXd lam_r;
    Eigen::MatrixXd vec_r;
    eigen_problem(S00aa, A.transpose() * St0K, StKK, lam_r, vec_r);

    double lr = 0.0;
    for (int i = 0; i < m.r; ++i) {
        lr += std::log1p(-lam_r[i]) - std::log1p(-joh.eigenvalues[i]);
    }
    lr *= N;

    WeakExogeneityResult w;
    w.variable = variable;
    w.lr_statistic = lr;
    w.df = m.r;
    w.p_value = chi2_sf(lr, m.r);
    w.weakly_exogenous_at_10pct = w.p_value >= 0.10;
    return w;
}

std::vector<LongRunVector> normalize_long_run(const VecmModel& m,
                                              const std::vector<std::string>& ordering) {
    if (m.r < 1) {
        throw InvalidArgumentError("normalize_long_run: rank must be >= 1");
    }
    if (ordering.size() != m.variable_names.size()) {
        throw InvalidArgumentError("normalize_long_run: ordering must list every variable");
    }
    const int k = m.k;
    const bool has_const = m.beta.rows() == k + 1;
    std::vector<int> perm;
    for (const auto& name : ordering) {
        const auto it = std::find(m.variable_names.begin(),
                                  m.variable_names.end(), name);
        if (it == m.variable_names.end()) {
            throw InvalidArgumentError("normalize_long_run: unknown variable '" +
                                       name + "'");
        }
        perm.push_back(static_cast<int>(it - m.variable_names.begin()));
    }
    Eigen::MatrixXd reordered(m.beta.rows(), m.r);
    for (int i = 0; i < k; ++i) {
        reordered.row(i) = m.beta.row(perm[static_cast<std::size_t>(i)]);
    }
    if (has_const) reordered.row(k) = m.beta.row(k);

    Eigen::MatrixXd lead = reordered.topRows(m.r);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lead);
    if (!lu.isInvertible()) {
        // find a variable that would make the block invertible
        std::string hint = ordering.front();
        throw NumericalError("normalize_long_run: singular leading block; "
                             "reorder so the first " + std::to_string(m.r) +
                             " variables span the cointegrating space");
    }
    Eigen::MatrixXd norm = reordered * lu.inverse();

    std::vector<LongRunVector> out;
    for (int v = 0; v < m.r; ++v) {
        LongRunVector lrv;
        lrv.normalization_variable = ordering[static_cast<std::size_t>(v)];
        lrv.variables = ordering;
        if (has_const) lrv.variables.push_back("const");
        lrv.coefficients = norm.col(v);
        out.push_back(std::move(lrv));
    }
    return out;
}

RestrictedChain restrict_to_subset(const Dataset& d,
                                   const std::vector<std::string>& keep,
                                   int p_levels, DetCase det_case,
                                   int fixed_rank) {
    if (keep.size() < 2) {
        throw InvalidArgumentError("restrict_to_subset: need at least 2 variables");
    }
    const Dataset sub = d.subset(keep);
    RestrictedChain chain{select_lag_order(sub, 3),
                          johansen_test(sub, p_levels, det_case),
                          VecmModel{}};
    const int r = fixed_rank >= 0 ? fixed_rank : chain.johansen.decided_rank;
    chain.model = fit_vecm(sub, p_levels, r, det_case);
    return chain;
}

} // namespace econ
