#pragma once

#include "econ/varmodel.hpp"
#include "econ/vecm.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace econ {

/// Level-VAR representation of a VECM:
///   A1 = I + Pi + G1,  Aj = Gj - G_{j-1},  A_p = -G_{p-1}.
VarModel vecm_to_var_levels(const VecmModel& m);

struct IrfResult {
    std::vector<Eigen::MatrixXd> responses;      // horizons 0..H, k x k
    std::vector<Eigen::MatrixXd> lower;          // optional bands
    std::vector<Eigen::MatrixXd> upper;
    std::vector<std::string> ordering;
    bool has_bands = false;
    int replications_used = 0;
    double band_level = 0.95;
};

/// Orthogonalized impulse responses; column = shocked variable (Cholesky
/// ordering as given), row = responder.
IrfResult irf(const VecmModel& m, int H, const std::vector<std::string>& ordering);

struct FevdResult {
    // shares[h](i, j): share of variable i's (h+1)-step forecast-error
    // variance attributed to shock j.
    std::vector<Eigen::MatrixXd> shares;
    std::vector<std::string> ordering;
};

FevdResult fevd(const VecmModel& m, int H, const std::vector<std::string>& ordering);

/// Residual-resampling bootstrap percentile bands around the point IRF.
/// Deterministic for a given seed regardless of thread count; replication
/// i always uses the stream derived from (seed, i).
IrfResult bootstrap_bands(const VecmModel& m, int H,
                          const std::vector<std::string>& ordering,
                          int replications, std::uint64_t seed,
                          double level = 0.95, bool parallel = true);

/// Non-orthogonalized MA coefficients Phi_0..Phi_H of a level VAR.
std::vector<Eigen::MatrixXd> ma_coefficients(const VarModel& v, int H);

} // namespace econ
