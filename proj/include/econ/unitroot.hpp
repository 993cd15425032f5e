#pragma once

#include "econ/series.hpp"

#include <map>
#include <optional>

namespace econ {

enum class Deterministic { None, Drift, DriftTrend };

struct UnitRootResult {
    double statistic = 0.0;
    std::map<int, double> critical_values; // keys 1, 5, 10 (percent)
    int lag_or_bandwidth = 0;
    Deterministic deterministic = Deterministic::Drift;
    bool reject_at_5pct = false;
    int n_obs = 0; // observations in the test regression
};

/// Dickey-Fuller critical value, interpolated in 1/T between tabulated
/// sample sizes {25, 50, 100, 250, 500, inf}.
double dickey_fuller_critical(int n_obs, Deterministic det, int pct);

/// Augmented Dickey-Fuller t-test; lag chosen in 0..max_lag by AIC.
UnitRootResult adf_test(const Series& s, Deterministic det, int max_lag = 3);

/// Phillips-Perron Z-t test with Bartlett-kernel long-run variance.
/// Default bandwidth is the Newey-West rule floor(4 (T/100)^{2/9}).
UnitRootResult pp_test(const Series& s, Deterministic det,
                       std::optional<int> bandwidth = std::nullopt);

/// 0 if the level rejects at 5% (PP as reference), 1 if the level fails
/// and the first difference rejects; errors otherwise.
int integration_order(const Series& s, Deterministic det_level,
                      Deterministic det_diff);

} // namespace econ
