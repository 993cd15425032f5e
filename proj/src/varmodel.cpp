#include "econ/varmodel.hpp"

#include "econ/distributions.hpp"
#include "econ/errors.hpp"

#include <algorithm>
#include <cmath>

namespace econ {

Eigen::MatrixXd VarModel::companion() const {
    const int kp = k * p;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(kp, kp);
    for (int j = 0; j < p; ++j) {
        C.block(0, j * k, k, k) = lag_coefficients[static_cast<std::size_t>(j)];
    }
    if (p > 1) {
        C.block(k, 0, kp - k, kp - k).setIdentity();
    }
    return C;
}

Eigen::MatrixXd VarModel::fitted(const Eigen::MatrixXd& levels) const {
    const long T = levels.rows();
    const long n = T - p;
    Eigen::MatrixXd out(n, k);
    for (long t = p; t < T; ++t) {
        Eigen::VectorXd v = intercepts;
        for (int j = 1; j <= p; ++j) {
            v += lag_coefficients[static_cast<std::size_t>(j - 1)] *
                 levels.row(t - j).transpose();
        }
        out.row(t - p) = v.transpose();
    }
    return out;
}

VarModel fit_var(const Dataset& d, int p, bool include_intercept,
                 int sample_start) {
    if (p < 1) {
        throw InvalidArgumentError("fit_var: lag order must be >= 1");
    }
    const Eigen::MatrixXd Y = d.matrix();
    const int T = static_cast<int>(Y.rows());
    const int k = static_cast<int>(Y.cols());
    const int s = sample_start < 0 ? p : sample_start;
    const int n = T - s;
    const int m = k * p + (include_intercept ? 1 : 0);
    if (n <= m) {
        throw InsufficientDataError("fit_var: " + std::to_string(n) +
                                    " observations cannot support " +
                                    std::to_string(m) + " parameters per equation");
    }
    Eigen::MatrixXd X(n, m);
    long c = 0;
    if (include_intercept) {
        X.col(c++).setOnes();
    }
    for (int j = 1; j <= p; ++j) {
        X.middleCols(c, k) = Y.middleRows(s - j, n);
        c += k;
    }
    Eigen::MatrixXd Yt = Y.middleRows(s, n);

    // identical regressors for every equation: one QR, k solves
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < X.cols()) {
        throw SingularDesignError("fit_var: collinear lag block");
    }
    Eigen::MatrixXd B = qr.solve(Yt); // m x k
    Eigen::MatrixXd E = Yt - X * B;

    VarModel v;
    v.k = k;
    v.p = p;
    v.has_intercept = include_intercept;
    v.variable_names = d.names();
    v.intercepts = include_intercept ? Eigen::VectorXd(B.row(0).transpose())
                                     : Eigen::VectorXd(Eigen::VectorXd::Zero(k));
    const int off = include_intercept ? 1 : 0;
    for (int j = 0; j < p; ++j) {
        v.lag_coefficients.push_back(
            B.middleRows(off + j * k, k).transpose());
    }
    v.residuals = E;
    v.sigma = E.transpose() * E / static_cast<double>(n);
    v.log_likelihood = gaussian_loglik(v.sigma, n, k);
    return v;
}

LagSelection select_lag_order(const Dataset& d, int max_lag) {
    if (max_lag < 1) {
        throw InvalidArgumentError("select_lag_order: max_lag must be >= 1");
    }
    const int T = d.T();
    const int k = d.k();
    const int n = T - max_lag;
    LagSelection sel;
    for (int p = 1; p <= max_lag; ++p) {
        // all candidates share the common sample starting at max_lag
        VarModel v = fit_var(d, p, true, max_lag);
        const Eigen::MatrixXd sigma =
            v.residuals.transpose() * v.residuals / static_cast<double>(n);
        sel.table.push_back({p, info_criteria(sigma, n, k * p + 1, k)});
    }
    auto pick = [&](auto getter) {
        int best = 1;
        double bv = getter(sel.table[0].criteria);
        for (const auto& row : sel.table) {
            const double val = getter(row.criteria);
            if (val < bv) {
                bv = val;
                best = row.lag;
            }
        }
        return best;
    };
    sel.chosen_lag_per_criterion["AIC"] = pick([](const InfoCriteria& c) { return c.aic; });
    sel.chosen_lag_per_criterion["HQ"] = pick([](const InfoCriteria& c) { return c.hq; });
    sel.chosen_lag_per_criterion["SC"] = pick([](const InfoCriteria& c) { return c.sc; });
    sel.chosen_lag_per_criterion["FPE"] = pick([](const InfoCriteria& c) { return c.fpe; });

    // modal vote, ties toward the smaller lag
    std::map<int, int> votes;
    for (const auto& [crit, lag] : sel.chosen_lag_per_criterion) votes[lag]++;
    int best_lag = sel.table.front().lag;
    int best_votes = -1;
    for (const auto& [lag, count] : votes) {
        if (count > best_votes) {
            best_votes = count;
            best_lag = lag;
        }
    }
    sel.recommended = best_lag;
    return sel;
}

GrangerResult granger_test(const Dataset& d, const std::string& cause,
                           const std::string& effect, int lag) {
    if (cause == effect) {
        throw InvalidArgumentError("granger_test: cause and effect must differ");
    }
    if (lag < 1) {
        throw InvalidArgumentError("granger_test: lag must be >= 1");
    }
    const Eigen::VectorXd x = d.at(cause).vector();
    const Eigen::VectorXd y = d.at(effect).vector();
    const long T = y.size();
    const long n = T - lag;
    const long df2 = n - (2 * lag + 1);
    if (df2 < 1) {
        throw InsufficientDataError("granger_test: sample too small for lag " +
                                    std::to_string(lag));
    }
    Eigen::VectorXd lhs = y.tail(n);
    Eigen::MatrixXd Xr(n, lag + 1);
    Xr.col(0).setOnes();
    for (int j = 1; j <= lag; ++j) Xr.col(j) = y.segment(lag - j, n);
    Eigen::MatrixXd Xu(n, 2 * lag + 1);
    Xu.leftCols(lag + 1) = Xr;
    for (int j = 1; j <= lag; ++j) Xu.col(lag + j) = x.segment(lag - j, n);

    const OlsFit restricted = ols(lhs, Xr);
    const OlsFit unrestricted = ols(lhs, Xu);

    GrangerResult g;
    g.cause = cause;
    g.effect = effect;
    g.lag = lag;
    g.df1 = lag;
    g.df2 = static_cast<int>(df2);
    g.statistic = ((restricted.rss - unrestricted.rss) / lag) /
                  (unrestricted.rss / static_cast<double>(df2));
    g.p_value = f_sf(g.statistic, g.df1, g.df2);
    g.reject_at_5pct = g.p_value < 0.05;
    return g;
}

} // namespace econ
