#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "econ/errors.hpp"
#include "econ/simulate.hpp"
#include "econ/vecm.hpp"

#include <cmath>

using namespace econ;

namespace {

Dataset vecm_fixture(std::uint64_t seed, int T, bool strong_alpha2 = false) {
    DgpSpec spec;
    spec.kind = DgpKind::Vecm;
    spec.T = T;
    spec.k = 3;
    spec.seed = seed;
    spec.alpha = Eigen::MatrixXd(3, 1);
    spec.alpha << -0.5, strong_alpha2 ? 0.3 : 0.0, 0.15;
    spec.beta = Eigen::MatrixXd(3, 1);
    spec.beta << 1.0, -0.8, -0.4;
    spec.gamma = Eigen::MatrixXd::Zero(3, 3);
    spec.gamma.diagonal() << 0.2, -0.1, 0.15;
    return generate(spec);
}

} // namespace

TEST_CASE("two-step estimates agree with direct OLS given beta") {
    const Dataset d = vecm_fixture(404, 300);
    const VecmModel m = fit_vecm(d, 2, 1);
    const int N = m.n_obs;

    // rebuild the regression by hand from the model's own beta
    const Eigen::MatrixXd Y = d.matrix();
    const long T = Y.rows();
    const Eigen::MatrixXd dY = Y.bottomRows(T - 1) - Y.topRows(T - 1);
    Eigen::MatrixXd Z0 = dY.bottomRows(N);
    Eigen::MatrixXd ZK(N, 4);
    ZK.leftCols(3) = Y.topRows(N);
    ZK.col(3).setOnes();
    Eigen::MatrixXd X(N, 1 + 3);
    X.col(0) = ZK * m.beta;
    X.rightCols(3) = dY.middleRows(0, N);
    for (int e = 0; e < 3; ++e) {
        const OlsFit fit = ols(Z0.col(e), X);
        CHECK(m.alpha(e, 0) == doctest::Approx(fit.coefficients[0]).epsilon(1e-9));
        for (int j = 0; j < 3; ++j) {
            CHECK(m.gamma[0](e, j) ==
                  doctest::Approx(fit.coefficients[1 + j]).epsilon(1e-9));
        }
        // standard errors agree too
        for (int i = 0; i < 4; ++i) {
            CHECK(m.std_err(i, e) ==
                  doctest::Approx(fit.std_errors[i]).epsilon(1e-9));
            CHECK(m.t_stats(i, e) == doctest::Approx(fit.t_stats[i]).epsilon(1e-9));
        }
    }
    // residuals orthogonal to the regressors
    CHECK((X.transpose() * m.residuals).cwiseAbs().maxCoeff() <= 1e-7);
}

TEST_CASE("beta is Phillips-normalized and the ECT is reconstructible") {
    const Dataset d = vecm_fixture(11, 250);
    const VecmModel m = fit_vecm(d, 2, 1);
    CHECK(m.beta(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.beta.rows() == 4); // restricted constant row
    // recovered long-run ratio close to the DGP's (1, -0.8, -0.4)
    CHECK(m.beta(1, 0) == doctest::Approx(-0.8).epsilon(0.15));
    CHECK(m.beta(2, 0) == doctest::Approx(-0.4).epsilon(0.35));
    CHECK(m.ect_series.rows() == m.n_obs);
}

TEST_CASE("pi is invariant under beta renormalization") {
    const Dataset d = vecm_fixture(3030, 200, true);
    const JohansenResult j = johansen_test(d, 2, DetCase::RestrictedConstant);
    const VecmModel m = fit_vecm(j, 1);
    const Eigen::MatrixXd pi1 = m.pi();

    // refit after rescaling the candidate eigenvector: alpha absorbs it
    JohansenResult j2 = j;
    j2.eigenvectors.col(0) *= -3.7;
    const VecmModel m2 = fit_vecm(j2, 1);
    CHECK((m2.pi() - pi1).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("normalize_long_run reorders and renormalizes") {
    const Dataset d = vecm_fixture(99, 300, true);
    const VecmModel m = fit_vecm(d, 2, 2);
    const auto lrs = normalize_long_run(m, {"y2", "y1", "y3"});
    REQUIRE(lrs.size() == 2);
    CHECK(lrs[0].normalization_variable == "y2");
    CHECK(lrs[1].normalization_variable == "y1");
    // leading block is the identity under the requested ordering
    CHECK(lrs[0].coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lrs[0].coefficients[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(lrs[1].coefficients[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(lrs[1].coefficients[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lrs[0].variables.back() == "const");
    CHECK(lrs[0].coefficients.size() == 4);

    CHECK_THROWS_AS(normalize_long_run(m, {"y1", "nope", "y3"}),
                    InvalidArgumentError);
}

TEST_CASE("weak exogeneity: non-adjusting variable accepted, adjusting rejected") {
    // alpha = (-0.5, 0, 0.15): y2 does not adjust, y1 strongly does
    const Dataset d = vecm_fixture(2468, 400);
    const VecmModel m = fit_vecm(d, 2, 1);
    const WeakExogeneityResult w1 = weak_exogeneity_test(m, "y1");
    const WeakExogeneityResult w2 = weak_exogeneity_test(m, "y2");
    CHECK(w1.df == 1);
    CHECK(w1.lr_statistic >= 0.0);
    CHECK(w1.p_value < 0.01);          // y1 adjusts
    CHECK(w2.p_value > 0.10);          // y2 does not
    CHECK(w2.weakly_exogenous_at_10pct);
    CHECK_FALSE(w1.weakly_exogenous_at_10pct);
    CHECK_THROWS_AS(weak_exogeneity_test(m, "nope"), InvalidArgumentError);
}

TEST_CASE("weak-exogeneity LR equals the restricted-eigenproblem construction") {
    const Dataset d = vecm_fixture(654, 150);
    const VecmModel m = fit_vecm(d, 2, 1);
    const JohansenResult j = johansen_test(d, 2, DetCase::RestrictedConstant);
    const int N = j.n_obs;

    // independent reconstruction following Johansen's partial-systems
    // formulas with corrected residuals
    const int jdx = 1; // y2
    Eigen::MatrixXd A(3, 2);
    A << 1, 0, 0, 0, 0, 1;
    const Eigen::VectorXd e2 = Eigen::VectorXd::Unit(3, jdx);
    const Eigen::MatrixXd Mp =
        e2 * e2.transpose() / (e2.dot(j.S00 * e2));
    const Eigen::MatrixXd Rt0 = j.R0 - j.R0 * Mp * j.S00;
    const Eigen::MatrixXd RtK = j.RK - j.R0 * Mp * j.S0K;
    const Eigen::MatrixXd St00 = Rt0.transpose() * Rt0 / N;
    const Eigen::MatrixXd StKK = RtK.transpose() * RtK / N;
    const Eigen::MatrixXd St0K = Rt0.transpose() * RtK / N;
    Eigen::VectorXd lam_r;
    Eigen::MatrixXd vec_r;
    eigen_problem(A.transpose() * St00 * A, A.transpose() * St0K, StKK,
                  lam_r, vec_r);
    const double lr =
        N * (std::log1p(-lam_r[0]) - std::log1p(-j.eigenvalues[0]));
    const WeakExogeneityResult w = weak_exogeneity_test(m, "y2");
    CHECK(w.lr_statistic == doctest::Approx(lr).epsilon(1e-10));
}

TEST_CASE("restrict_to_subset reruns the chain on the kept columns") {
    const Dataset d = vecm_fixture(31, 350, true);
    const RestrictedChain chain =
        restrict_to_subset(d, {"y1", "y2"}, 2, DetCase::RestrictedConstant, 1);
    CHECK(chain.model.k == 2);
    CHECK(chain.model.r == 1);
    CHECK(chain.model.variable_names ==
          std::vector<std::string>{"y1", "y2"});
    CHECK(chain.johansen.n_obs == chain.model.n_obs);
    CHECK_THROWS_AS(restrict_to_subset(d, {"y1"}, 2,
                                       DetCase::RestrictedConstant, 1),
                    InvalidArgumentError);
}

TEST_CASE("rank bounds are rejected") {
    const Dataset d = vecm_fixture(2, 100);
    CHECK_THROWS_AS(fit_vecm(d, 2, 0), InvalidArgumentError);
    CHECK_THROWS_AS(fit_vecm(d, 2, 3), InvalidArgumentError);
    CHECK_THROWS_AS(fit_vecm(d, 1, 1), InvalidArgumentError);
}
