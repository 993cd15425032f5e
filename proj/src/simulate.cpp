#include "econ/simulate.hpp"

#include "econ/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace econ {

double GaussianRng::uniform() {
    // (0,1): never exactly 0, so the Box-Muller log is finite
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianRng::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 over the combined state; decorrelates neighbouring streams
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

bool is_stationary_kind(DgpKind k) {
    return k == DgpKind::WhiteNoise || k == DgpKind::Ar1 ||
           k == DgpKind::Var || k == DgpKind::Arch1;
}

Eigen::VectorXd draw(GaussianRng& rng, int k) {
    Eigen::VectorXd e(k);
    for (int i = 0; i < k; ++i) e[i] = rng();
    return e;
}

} // namespace

Dataset generate(const DgpSpec& spec) {
    if (spec.T < 2) {
        throw InvalidArgumentError("generate: T must be >= 2");
    }
    if (spec.k < 1) {
        throw InvalidArgumentError("generate: k must be >= 1");
    }
    const int burn = spec.burn_in >= 0
                         ? spec.burn_in
                         : (is_stationary_kind(spec.kind) ? 200 : 0);
    const int total = spec.T + burn;
    const int k = spec.k;
    GaussianRng rng(spec.seed);

    const bool has_chol = spec.innovation_chol.size() > 0;
    if (has_chol && (spec.innovation_chol.rows() != k ||
                     spec.innovation_chol.cols() != k)) {
        throw InvalidArgumentError("generate: innovation_chol must be k x k");
    }
    auto innov = [&]() {
        Eigen::VectorXd e = draw(rng, k);
        return has_chol ? Eigen::VectorXd(spec.innovation_chol * e) : e;
    };

    Eigen::MatrixXd Y(total, k);
    switch (spec.kind) {
        case DgpKind::WhiteNoise: {
            for (int t = 0; t < total; ++t) Y.row(t) = innov().transpose();
            break;
        }
        case DgpKind::RandomWalk: {
            Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
            for (int t = 0; t < total; ++t) {
                y += innov();
                y.array() += spec.drift;
                Y.row(t) = y.transpose();
            }
            break;
        }
        case DgpKind::Ar1: {
            if (std::abs(spec.ar_coefficient) >= 1.0) {
                throw InvalidArgumentError(
                    "generate: |ar_coefficient| must be < 1; use RandomWalk "
                    "for a unit root");
            }
            Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
            for (int t = 0; t < total; ++t) {
                y = spec.ar_coefficient * y + innov();
                Y.row(t) = y.transpose();
            }
            break;
        }
        case DgpKind::Var: {
            if (spec.var_coefficients.empty()) {
                throw InvalidArgumentError("generate: Var kind needs var_coefficients");
            }
            const int p = static_cast<int>(spec.var_coefficients.size());
            for (const auto& A : spec.var_coefficients) {
                if (A.rows() != k || A.cols() != k) {
                    throw InvalidArgumentError("generate: VAR coefficient must be k x k");
                }
            }
            Eigen::MatrixXd hist = Eigen::MatrixXd::Zero(p, k);
            for (int t = 0; t < total; ++t) {
                Eigen::VectorXd y = innov();
                for (int j = 1; j <= p; ++j) {
                    const long row = (t - j >= 0) ? -1 : p + t - j;
                    const Eigen::VectorXd prev =
                        row < 0 ? Eigen::VectorXd(Y.row(t - j).transpose())
                                : Eigen::VectorXd(hist.row(row).transpose());
                    y += spec.var_coefficients[static_cast<std::size_t>(j - 1)] * prev;
                }
                Y.row(t) = y.transpose();
            }
            break;
        }
        case DgpKind::Vecm: {
            if (spec.alpha.rows() != k || spec.beta.rows() != k ||
                spec.alpha.cols() != spec.beta.cols() || spec.alpha.cols() < 1) {
                throw InvalidArgumentError(
                    "generate: Vecm kind needs conformable k x r alpha and beta");
            }
            const bool has_gamma = spec.gamma.size() > 0;
            if (has_gamma && (spec.gamma.rows() != k || spec.gamma.cols() != k)) {
                throw InvalidArgumentError("generate: gamma must be k x k");
            }
            Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
            Eigen::VectorXd dy_prev = Eigen::VectorXd::Zero(k);
            for (int t = 0; t < total; ++t) {
                Eigen::VectorXd dy =
                    spec.alpha * (spec.beta.transpose() * y) + innov();
                if (has_gamma) dy += spec.gamma * dy_prev;
                y += dy;
                dy_prev = dy;
                Y.row(t) = y.transpose();
            }
            break;
        }
        case DgpKind::Arch1: {
            if (spec.arch_omega <= 0.0 || spec.arch_alpha < 0.0 ||
                spec.arch_alpha >= 1.0) {
                throw InvalidArgumentError(
                    "generate: need arch_omega > 0 and arch_alpha in [0,1)");
            }
            Eigen::VectorXd h =
                Eigen::VectorXd::Constant(k, spec.arch_omega /
                                                 (1.0 - spec.arch_alpha));
            for (int t = 0; t < total; ++t) {
                const Eigen::VectorXd z = draw(rng, k);
                Eigen::VectorXd e = h.array().sqrt() * z.array();
                Y.row(t) = e.transpose();
                h = (spec.arch_omega + spec.arch_alpha * e.array().square()).matrix();
            }
            break;
        }
    }

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) names.push_back("y" + std::to_string(i + 1));
    return Dataset::from_matrix(Y.bottomRows(spec.T), names);
}

} // namespace econ
