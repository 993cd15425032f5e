#include "econ/series.hpp"

#include "econ/errors.hpp"

#include <algorithm>
#include <cmath>

namespace econ {

Series::Series(std::string name, std::vector<double> values,
               std::vector<int> years, std::string unit)
    : name_(std::move(name)), values_(std::move(values)),
      years_(std::move(years)), unit_(std::move(unit)) {
    if (values_.empty()) {
        throw InsufficientDataError("series '" + name_ + "' is empty");
    }
    if (values_.size() != years_.size()) {
        throw IngestionError("series '" + name_ + "': " +
                             std::to_string(values_.size()) + " values vs " +
                             std::to_string(years_.size()) + " years");
    }
    for (std::size_t i = 1; i < years_.size(); ++i) {
        if (years_[i] != years_[i - 1] + 1) {
            throw IngestionError("series '" + name_ + "': time index not an " +
                                 "annual run at year " + std::to_string(years_[i]));
        }
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw IngestionError("series '" + name_ + "': non-finite value at year " +
                                 std::to_string(years_[i]));
        }
    }
}

Eigen::VectorXd Series::vector() const {
    return Eigen::Map<const Eigen::VectorXd>(values_.data(),
                                             static_cast<long>(values_.size()));
}

Series log_transform(const Series& s) {
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0.0) {
            throw DomainError("log_transform(" + s.name() + "): nonpositive value " +
                              std::to_string(s[i]) + " at year " +
                              std::to_string(s.years()[i]));
        }
        out[i] = std::log(s[i]);
    }
    return Series("L" + s.name(), std::move(out), s.years(), "log " + s.unit());
}

Series first_difference(const Series& s) {
    if (s.size() < 2) {
        throw InsufficientDataError("first_difference(" + s.name() +
                                    "): need at least 2 observations");
    }
    std::vector<double> out(s.size() - 1);
    std::vector<int> years(s.years().begin() + 1, s.years().end());
    for (std::size_t i = 1; i < s.size(); ++i) {
        out[i - 1] = s[i] - s[i - 1];
    }
    return Series("D" + s.name(), std::move(out), std::move(years), s.unit());
}

DescriptiveStats describe(const Series& s) {
    const auto& v = s.values();
    const int n = static_cast<int>(v.size());
    DescriptiveStats d{};
    d.n_obs = n;
    d.mean = 0.0;
    d.min = v[0];
    d.max = v[0];
    for (double x : v) {
        d.mean += x;
        d.min = std::min(d.min, x);
        d.max = std::max(d.max, x);
    }
    d.mean /= n;
    double ss = 0.0;
    for (double x : v) ss += (x - d.mean) * (x - d.mean);
    d.sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    d.median = n % 2 ? sorted[n / 2]
                     : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    return d;
}

} // namespace econ
