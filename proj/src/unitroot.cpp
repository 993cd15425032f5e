#include "econ/unitroot.hpp"

#include "econ/errors.hpp"
#include "econ/linreg.hpp"

#include <array>
#include <cmath>

namespace econ {

namespace {

// Dickey-Fuller t-statistic critical values by sample size and
// deterministic kind (Fuller 1976, Table 8.5.2).
constexpr std::array<double, 6> kTableT = {25.0, 50.0, 100.0, 250.0, 500.0, 1e18};

struct CritRow {
    std::array<double, 6> pct1, pct5, pct10;
};

const CritRow& crit_row(Deterministic det) {
    static const CritRow none{{-2.66, -2.62, -2.60, -2.58, -2.58, -2.58},
                              {-1.95, -1.95, -1.95, -1.95, -1.95, -1.95},
                              {-1.60, -1.61, -1.61, -1.62, -1.62, -1.62}};
    static const CritRow drift{{-3.75, -3.58, -3.51, -3.46, -3.44, -3.43},
                               {-3.00, -2.93, -2.89, -2.88, -2.87, -2.86},
                               {-2.63, -2.60, -2.58, -2.57, -2.57, -2.57}};
    static const CritRow trend{{-4.38, -4.15, -4.04, -3.99, -3.98, -3.96},
                               {-3.60, -3.50, -3.45, -3.43, -3.42, -3.41},
                               {-3.24, -3.18, -3.15, -3.13, -3.13, -3.12}};
    switch (det) {
        case Deterministic::None: return none;
        case Deterministic::Drift: return drift;
        case Deterministic::DriftTrend: return trend;
    }
    return drift;
}

int det_columns(Deterministic det) {
    switch (det) {
        case Deterministic::None: return 0;
        case Deterministic::Drift: return 1;
        case Deterministic::DriftTrend: return 2;
    }
    return 1;
}

// Appends deterministic columns (constant, linear trend) to X.
void fill_det(Eigen::MatrixXd& X, long first_col, Deterministic det) {
    const long n = X.rows();
    if (det == Deterministic::None) return;
    X.col(first_col).setOnes();
    if (det == Deterministic::DriftTrend) {
        for (long t = 0; t < n; ++t) X(t, first_col + 1) = static_cast<double>(t);
    }
}

std::map<int, double> crit_map(int n_obs, Deterministic det) {
    return {{1, dickey_fuller_critical(n_obs, det, 1)},
            {5, dickey_fuller_critical(n_obs, det, 5)},
            {10, dickey_fuller_critical(n_obs, det, 10)}};
}

void check_variance(const Series& s) {
    const auto v = s.vector();
    const double mean = v.mean();
    if ((v.array() - mean).abs().maxCoeff() < 1e-12 * (1.0 + std::abs(mean))) {
        throw SingularDesignError("unit root test: series '" + s.name() +
                                  "' has zero variance");
    }
}

} // namespace

double dickey_fuller_critical(int n_obs, Deterministic det, int pct) {
    const CritRow& row = crit_row(det);
    const std::array<double, 6>* vals = nullptr;
    switch (pct) {
        case 1: vals = &row.pct1; break;
        case 5: vals = &row.pct5; break;
        case 10: vals = &row.pct10; break;
        default:
            throw InvalidArgumentError("dickey_fuller_critical: pct must be 1, 5 or 10");
    }
    const double x = 1.0 / std::max(25.0, static_cast<double>(n_obs));
    // linear interpolation in 1/T; table entries ordered by T ascending
    for (std::size_t i = 1; i < kTableT.size(); ++i) {
        const double x_hi = 1.0 / kTableT[i - 1];
        const double x_lo = 1.0 / kTableT[i];
        if (x >= x_lo) {
            const double w = (x - x_lo) / (x_hi - x_lo);
            return (*vals)[i] + w * ((*vals)[i - 1] - (*vals)[i]);
        }
    }
    return vals->back();
}

UnitRootResult adf_test(const Series& s, Deterministic det, int max_lag) {
    check_variance(s);
    const Eigen::VectorXd y = s.vector();
    const long T = y.size();
    if (T < max_lag + 4 + det_columns(det)) {
        throw InsufficientDataError("adf_test: series too short for max_lag " +
                                    std::to_string(max_lag));
    }
    Eigen::VectorXd dy = y.tail(T - 1) - y.head(T - 1);

    const auto regress = [&](int p, long sample_lag) {
        // rows start at `sample_lag` so candidates share a sample during
        // selection (scale-invariant AIC comparison)
        const long n = dy.size() - sample_lag;
        Eigen::VectorXd lhs = dy.tail(n);
        Eigen::MatrixXd X(n, 1 + p + det_columns(det));
        X.col(0) = y.segment(sample_lag, n);
        for (int j = 1; j <= p; ++j) {
            X.col(j) = dy.segment(sample_lag - j, n);
        }
        fill_det(X, 1 + p, det);
        return ols(lhs, X);
    };

    double best_aic = 0.0;
    int best_p = 0;
    for (int p = 0; p <= max_lag; ++p) {
        const long n = dy.size() - max_lag;
        const OlsFit fit = regress(p, max_lag);
        const double aic = n * std::log(fit.rss / n) + 2.0 * fit.n_params;
        if (p == 0 || aic < best_aic) {
            best_aic = aic;
            best_p = p;
        }
    }
    // final regression at the chosen lag on its maximal sample
    const OlsFit best = regress(best_p, best_p);
    const int best_n = static_cast<int>(dy.size()) - best_p;

    UnitRootResult r;
    r.statistic = best.t_stats[0];
    r.lag_or_bandwidth = best_p;
    r.deterministic = det;
    r.n_obs = best_n;
    r.critical_values = crit_map(best_n, det);
    r.reject_at_5pct = r.statistic < r.critical_values.at(5);
    return r;
}

UnitRootResult pp_test(const Series& s, Deterministic det,
                       std::optional<int> bandwidth) {
    check_variance(s);
    const Eigen::VectorXd y = s.vector();
    const long T = y.size();
    if (T < 10) {
        throw InsufficientDataError("pp_test: need at least 10 observations");
    }
    const long n = T - 1;
    Eigen::VectorXd dy = y.tail(n) - y.head(n);
    Eigen::MatrixXd X(n, 1 + det_columns(det));
    X.col(0) = y.head(n);
    fill_det(X, 1, det);
    const OlsFit fit = ols(dy, X);

    const int L = bandwidth.value_or(
        static_cast<int>(std::floor(4.0 * std::pow(n / 100.0, 2.0 / 9.0))));
    const Eigen::VectorXd& u = fit.residuals;
    const double gamma0 = u.squaredNorm() / n;
    double lambda = gamma0;
    for (int j = 1; j <= L; ++j) {
        const double gj = u.tail(n - j).dot(u.head(n - j)) / n;
        lambda += 2.0 * (1.0 - static_cast<double>(j) / (L + 1)) * gj;
    }
    if (lambda <= 0.0) {
        throw NumericalError("pp_test: nonpositive long-run variance estimate");
    }
    const double t = fit.t_stats[0];
    const double se = fit.std_errors[0];
    const double sig = std::sqrt(fit.sigma2);
    const double zt = std::sqrt(gamma0 / lambda) * t -
                      (lambda - gamma0) / (2.0 * std::sqrt(lambda)) * n * se / sig;

    UnitRootResult r;
    r.statistic = zt;
    r.lag_or_bandwidth = L;
    r.deterministic = det;
    r.n_obs = static_cast<int>(n);
    r.critical_values = crit_map(static_cast<int>(n), det);
    r.reject_at_5pct = r.statistic < r.critical_values.at(5);
    return r;
}

int integration_order(const Series& s, Deterministic det_level,
                      Deterministic det_diff) {
    const UnitRootResult level = pp_test(s, det_level);
    if (level.reject_at_5pct) return 0;
    const UnitRootResult diff = pp_test(first_difference(s), det_diff);
    if (diff.reject_at_5pct) return 1;
    throw DomainError("integration_order(" + s.name() +
                      "): neither level nor first difference rejects a unit "
                      "root; order > 1 is unsupported");
}

} // namespace econ
