#include "econ/dynamics.hpp"

#include "econ/errors.hpp"
#include "econ/simulate.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace econ {

namespace {

std::vector<int> permutation_for(const std::vector<std::string>& names,
                                 const std::vector<std::string>& ordering) {
    if (ordering.size() != names.size()) {
        throw InvalidArgumentError("ordering must be a permutation of the variables");
    }
    std::vector<int> perm;
    for (const auto& nm : ordering) {
        const auto it = std::find(names.begin(), names.end(), nm);
        if (it == names.end()) {
            throw InvalidArgumentError("ordering names unknown variable '" + nm + "'");
        }
        perm.push_back(static_cast<int>(it - names.begin()));
    }
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i)) {
            throw InvalidArgumentError("ordering repeats or omits a variable");
        }
    }
    return perm;
}

Eigen::MatrixXd permute(const Eigen::MatrixXd& M, const std::vector<int>& perm) {
    Eigen::MatrixXd out(M.rows(), M.cols());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = 0; j < perm.size(); ++j) {
            out(static_cast<long>(i), static_cast<long>(j)) =
                M(perm[i], perm[j]);
        }
    }
    return out;
}

std::vector<Eigen::MatrixXd> orthogonalized_irf(const VecmModel& m, int H,
                                                const std::vector<int>& perm) {
    const VarModel level = vecm_to_var_levels(m);
    const std::vector<Eigen::MatrixXd> phi = ma_coefficients(level, H);
    const Eigen::MatrixXd sigma_o = permute(m.sigma, perm);
    Eigen::LLT<Eigen::MatrixXd> llt(sigma_o);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("irf: residual covariance not positive definite");
    }
    const Eigen::MatrixXd P = llt.matrixL();
    std::vector<Eigen::MatrixXd> theta;
    theta.reserve(phi.size());
    for (const auto& ph : phi) {
        theta.push_back(permute(ph, perm) * P);
    }
    return theta;
}

} // namespace

VarModel vecm_to_var_levels(const VecmModel& m) {
    const int k = m.k;
    const int p = m.p_diff + 1;
    VarModel v;
    v.k = k;
    v.p = p;
    v.variable_names = m.variable_names;
    v.has_intercept = true;
    // long-run VECM parameterization: the levels term enters at lag p, so
    //   y_t = (I + G1) y_{t-1} + sum_j (G_j - G_{j-1}) y_{t-j}
    //         + (Pi - G_{p-1}) y_{t-p} + c
    const Eigen::MatrixXd pi = m.pi();
    std::vector<Eigen::MatrixXd> A(static_cast<std::size_t>(p),
                                   Eigen::MatrixXd::Zero(k, k));
    A[0] = Eigen::MatrixXd::Identity(k, k);
    if (m.p_diff >= 1) {
        A[0] += m.gamma[0];
        for (int j = 1; j < m.p_diff; ++j) {
            A[static_cast<std::size_t>(j)] =
                m.gamma[static_cast<std::size_t>(j)] -
                m.gamma[static_cast<std::size_t>(j - 1)];
        }
        A[static_cast<std::size_t>(p - 1)] =
            pi - m.gamma[static_cast<std::size_t>(m.p_diff - 1)];
    } else {
        A[0] += pi;
    }
    v.lag_coefficients = std::move(A);
    v.intercepts = m.intercepts;
    if (m.det_case == DetCase::RestrictedConstant) {
        v.intercepts = m.alpha * m.beta.row(k).transpose();
    }
    v.residuals = m.residuals;
    v.sigma = m.sigma;
    v.log_likelihood = m.log_likelihood;
    return v;
}

std::vector<Eigen::MatrixXd> ma_coefficients(const VarModel& v, int H) {
    const int k = v.k;
    std::vector<Eigen::MatrixXd> phi;
    phi.reserve(static_cast<std::size_t>(H) + 1);
    phi.push_back(Eigen::MatrixXd::Identity(k, k));
    for (int h = 1; h <= H; ++h) {
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(k, k);
        for (int j = 1; j <= std::min(h, v.p); ++j) {
            M += phi[static_cast<std::size_t>(h - j)] *
                 v.lag_coefficients[static_cast<std::size_t>(j - 1)];
        }
        phi.push_back(std::move(M));
    }
    return phi;
}

IrfResult irf(const VecmModel& m, int H, const std::vector<std::string>& ordering) {
    if (H < 1) {
        throw InvalidArgumentError("irf: horizon must be >= 1");
    }
    const auto perm = permutation_for(m.variable_names, ordering);
    IrfResult r;
    r.responses = orthogonalized_irf(m, H, perm);
    r.ordering = ordering;
    return r;
}

FevdResult fevd(const VecmModel& m, int H, const std::vector<std::string>& ordering) {
    if (H < 1) {
        throw InvalidArgumentError("fevd: horizon must be >= 1");
    }
    const auto perm = permutation_for(m.variable_names, ordering);
    const auto theta = orthogonalized_irf(m, H - 1, perm);
    FevdResult f;
    f.ordering = ordering;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m.k, m.k);
    for (int h = 0; h < H; ++h) {
        acc += theta[static_cast<std::size_t>(h)].array().square().matrix();
        Eigen::MatrixXd share = acc;
        for (long i = 0; i < share.rows(); ++i) {
            share.row(i) /= share.row(i).sum();
        }
        f.shares.push_back(std::move(share));
    }
    return f;
}

IrfResult bootstrap_bands(const VecmModel& m, int H,
                          const std::vector<std::string>& ordering,
                          int replications, std::uint64_t seed, double level,
                          bool parallel) {
    if (replications < 100) {
        throw InvalidArgumentError("bootstrap_bands: need at least 100 replications");
    }
    if (m.levels.size() == 0) {
        throw InvalidArgumentError("bootstrap_bands: model lacks level data");
    }
    IrfResult point = irf(m, H, ordering);

    const int k = m.k;
    const int p = m.p_diff + 1;
    const int T = static_cast<int>(m.levels.rows());
    const VarModel level_var = vecm_to_var_levels(m);
    Eigen::MatrixXd centered =
        m.residuals.rowwise() - m.residuals.colwise().mean();
    const int nres = static_cast<int>(centered.rows());

    // one slot per replication so thread scheduling cannot reorder results
    std::vector<std::vector<Eigen::MatrixXd>> draws(
        static_cast<std::size_t>(replications));
    std::vector<char> ok(static_cast<std::size_t>(replications), 0);

    auto run_one = [&](int rep) {
        GaussianRng rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
        Eigen::MatrixXd Yb(T, k);
        Yb.topRows(p) = m.levels.topRows(p);
        for (int t = p; t < T; ++t) {
            const auto idx = static_cast<long>(rng.raw() % static_cast<std::uint64_t>(nres));
            Eigen::VectorXd y = level_var.intercepts + centered.row(idx).transpose();
            for (int j = 1; j <= p; ++j) {
                y += level_var.lag_coefficients[static_cast<std::size_t>(j - 1)] *
                     Yb.row(t - j).transpose();
            }
            Yb.row(t) = y.transpose();
        }
        try {
            const Dataset db = Dataset::from_matrix(Yb, m.variable_names);
            const VecmModel mb = fit_vecm(db, p, m.r, m.det_case);
            draws[static_cast<std::size_t>(rep)] =
                irf(mb, H, ordering).responses;
            ok[static_cast<std::size_t>(rep)] = 1;
        } catch (const Error&) {
            // counted below; a failed replication is skipped
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int rep = 0; rep < replications; ++rep) run_one(rep);
    } else {
        for (int rep = 0; rep < replications; ++rep) run_one(rep);
    }

    int n_ok = 0;
    for (char c : ok) n_ok += c;
    if (n_ok < 0.9 * replications) {
        throw NumericalError("bootstrap_bands: more than 10% of replications failed (" +
                             std::to_string(replications - n_ok) + " of " +
                             std::to_string(replications) + ")");
    }

    const double lo_q = (1.0 - level) / 2.0;
    const double hi_q = 1.0 - lo_q;
    point.lower.assign(static_cast<std::size_t>(H) + 1, Eigen::MatrixXd(k, k));
    point.upper.assign(static_cast<std::size_t>(H) + 1, Eigen::MatrixXd(k, k));
    std::vector<double> cell;
    cell.reserve(static_cast<std::size_t>(n_ok));
    for (int h = 0; h <= H; ++h) {
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                cell.clear();
                for (int rep = 0; rep < replications; ++rep) {
                    if (ok[static_cast<std::size_t>(rep)]) {
                        cell.push_back(draws[static_cast<std::size_t>(rep)]
                                            [static_cast<std::size_t>(h)](i, j));
                    }
                }
                std::sort(cell.begin(), cell.end());
                const auto quantile = [&](double qq) {
                    const double pos = qq * (static_cast<double>(cell.size()) - 1);
                    const auto lo = static_cast<std::size_t>(std::floor(pos));
                    const auto hi = static_cast<std::size_t>(std::ceil(pos));
                    const double w = pos - static_cast<double>(lo);
                    return (1.0 - w) * cell[lo] + w * cell[hi];
                };
                point.lower[static_cast<std::size_t>(h)](i, j) = quantile(lo_q);
                point.upper[static_cast<std::size_t>(h)](i, j) = quantile(hi_q);
            }
        }
    }
    point.has_bands = true;
    point.replications_used = n_ok;
    point.band_level = level;
    return point;
}

} // namespace econ
