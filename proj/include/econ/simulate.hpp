#pragma once

#include "econ/dataset.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

namespace econ {

/// Deterministic standard-normal stream: mt19937_64 + Box-Muller on
/// explicit uniforms. The generator identity is part of every fixture's
/// contract; std::normal_distribution is implementation-defined and
/// deliberately avoided.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}
    double operator()();
    double uniform(); // in (0,1)
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Derives an independent per-stream seed from (seed, stream index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

enum class DgpKind { WhiteNoise, RandomWalk, Ar1, Var, Vecm, Arch1 };

struct DgpSpec {
    DgpKind kind = DgpKind::WhiteNoise;
    int T = 100;
    int k = 1;
    int burn_in = -1; // default: 200 for stationary kinds, 0 otherwise
    std::uint64_t seed = 0;

    double ar_coefficient = 0.5;                  // ar1
    std::vector<Eigen::MatrixXd> var_coefficients; // var
    Eigen::MatrixXd alpha;                        // vecm, k x r
    Eigen::MatrixXd beta;                         // vecm, k x r
    Eigen::MatrixXd gamma;                        // vecm, optional k x k
    double arch_omega = 1.0;                      // arch1
    double arch_alpha = 0.6;
    Eigen::MatrixXd innovation_chol;              // optional k x k
    double drift = 0.0;                           // random walk drift
};

/// Seeded data generation; deterministic for a given spec.
Dataset generate(const DgpSpec& spec);

} // namespace econ
