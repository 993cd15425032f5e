#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "econ/errors.hpp"
#include "econ/johansen.hpp"
#include "econ/simulate.hpp"

#include <cmath>
#include <set>

using namespace econ;

TEST_CASE("gaussian stream: deterministic, standard moments") {
    GaussianRng a(123), b(123), c(124);
    for (int i = 0; i < 100; ++i) {
        const double x = a();
        CHECK(x == b());
        CHECK(std::isfinite(x));
    }
    CHECK(a() != c());

    GaussianRng rng(9);
    const int n = 200000;
    long double s1 = 0.0L, s2 = 0.0L, s3 = 0.0L, s4 = 0.0L;
    for (int i = 0; i < n; ++i) {
        const long double x = rng();
        s1 += x;
        s2 += x * x;
        s3 += x * x * x;
        s4 += x * x * x * x;
    }
    CHECK(static_cast<double>(s1 / n) == doctest::Approx(0.0).epsilon(0.02).scale(1));
    CHECK(static_cast<double>(s2 / n) == doctest::Approx(1.0).epsilon(0.02));
    CHECK(static_cast<double>(s3 / n) == doctest::Approx(0.0).epsilon(0.05).scale(1));
    CHECK(static_cast<double>(s4 / n) == doctest::Approx(3.0).epsilon(0.05));

    // uniform stays strictly inside (0, 1)
    GaussianRng u(77);
    for (int i = 0; i < 10000; ++i) {
        const double x = u.uniform();
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("derive_seed decorrelates neighbouring streams") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seen.insert(derive_seed(42, i));
    }
    CHECK(seen.size() == 1000);
    CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}

TEST_CASE("generate is deterministic and respects shapes") {
    DgpSpec spec;
    spec.kind = DgpKind::RandomWalk;
    spec.T = 50;
    spec.k = 3;
    spec.seed = 5;
    const Dataset a = generate(spec);
    const Dataset b = generate(spec);
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.T() == 50);
    CHECK(a.k() == 3);
    CHECK(a.names() == std::vector<std::string>{"y1", "y2", "y3"});

    spec.seed = 6;
    CHECK((generate(spec).matrix() - a.matrix()).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("white noise and AR(1) sample moments") {
    DgpSpec spec;
    spec.kind = DgpKind::WhiteNoise;
    spec.T = 50000;
    spec.k = 1;
    spec.seed = 31;
    const Eigen::VectorXd w = generate(spec).at(0).vector();
    CHECK(w.mean() == doctest::Approx(0.0).epsilon(0.02).scale(1));
    CHECK(w.squaredNorm() / w.size() == doctest::Approx(1.0).epsilon(0.02));

    spec.kind = DgpKind::Ar1;
    spec.ar_coefficient = 0.6;
    const Eigen::VectorXd x = generate(spec).at(0).vector();
    const long n = x.size();
    const double rho = x.tail(n - 1).dot(x.head(n - 1)) / x.head(n - 1).squaredNorm();
    CHECK(rho == doctest::Approx(0.6).epsilon(0.03));
    // stationary variance 1 / (1 - phi^2)
    CHECK(x.squaredNorm() / n == doctest::Approx(1.0 / (1.0 - 0.36)).epsilon(0.05));
}

TEST_CASE("random walk with drift drifts") {
    DgpSpec spec;
    spec.kind = DgpKind::RandomWalk;
    spec.T = 4000;
    spec.k = 1;
    spec.seed = 3;
    spec.drift = 0.5;
    const Eigen::VectorXd y = generate(spec).at(0).vector();
    CHECK(y[3999] / 4000.0 == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("ARCH(1) output is heavy-tailed but uncorrelated") {
    DgpSpec spec;
    spec.kind = DgpKind::Arch1;
    spec.T = 60000;
    spec.k = 1;
    spec.seed = 8;
    spec.arch_alpha = 0.5;
    const Eigen::VectorXd e = generate(spec).at(0).vector();
    const long n = e.size();
    const double m2 = e.squaredNorm() / n;
    double m4 = 0.0;
    for (long t = 0; t < n; ++t) m4 += std::pow(e[t], 4);
    m4 /= n;
    CHECK(m4 / (m2 * m2) > 3.5); // excess kurtosis from the ARCH effect
    const double rho = e.tail(n - 1).dot(e.head(n - 1)) / e.head(n - 1).squaredNorm();
    CHECK(std::abs(rho) < 0.02);
}

TEST_CASE("VECM kind generates a cointegrated system with the given rank") {
    DgpSpec spec;
    spec.kind = DgpKind::Vecm;
    spec.T = 2000;
    spec.k = 2;
    spec.seed = 1234;
    spec.alpha = Eigen::MatrixXd(2, 1);
    spec.alpha << -0.5, 0.1;
    spec.beta = Eigen::MatrixXd(2, 1);
    spec.beta << 1.0, -1.0;
    const Dataset d = generate(spec);
    const JohansenResult j = johansen_test(d, 2, DetCase::RestrictedConstant);
    CHECK(j.decided_rank == 1);
    // the equilibrium error y1 - y2 stays bounded
    const Eigen::VectorXd z = d.at("y1").vector() - d.at("y2").vector();
    CHECK(z.cwiseAbs().maxCoeff() < 50.0);
}

TEST_CASE("specification errors") {
    DgpSpec spec;
    spec.T = 1;
    CHECK_THROWS_AS(generate(spec), InvalidArgumentError);
    spec.T = 100;
    spec.k = 0;
    CHECK_THROWS_AS(generate(spec), InvalidArgumentError);
    spec.k = 2;
    spec.kind = DgpKind::Ar1;
    spec.ar_coefficient = 1.0;
    CHECK_THROWS_AS(generate(spec), InvalidArgumentError);
    spec.kind = DgpKind::Var;
    CHECK_THROWS_AS(generate(spec), InvalidArgumentError);
    spec.kind = DgpKind::Vecm;
    CHECK_THROWS_AS(generate(spec), InvalidArgumentError);
    spec.kind = DgpKind::Arch1;
    spec.arch_alpha = 1.5;
    CHECK_THROWS_AS(generate(spec), InvalidArgumentError);
    spec.arch_alpha = 0.3;
    spec.innovation_chol = Eigen::MatrixXd::Identity(3, 3); // wrong size
    CHECK_THROWS_AS(generate(spec), InvalidArgumentError);
}
