#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace econ {

/// A named annual time series. Immutable after construction.
/// The time index is a strictly increasing, gap-free run of years.
class Series {
public:
    Series(std::string name, std::vector<double> values,
           std::vector<int> years, std::string unit = "");

    const std::string& name() const { return name_; }
    const std::string& unit() const { return unit_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<int>& years() const { return years_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    int start_year() const { return years_.front(); }

    Eigen::VectorXd vector() const;

private:
    std::string name_;
    std::vector<double> values_;
    std::vector<int> years_;
    std::string unit_;
};

struct DescriptiveStats {
    double mean;
    double median;
    double max;
    double min;
    double sd; // sample standard deviation, divisor n-1
    int n_obs;
};

/// Element-wise natural logarithm; errors on nonpositive values.
Series log_transform(const Series& s);

/// First difference; output drops the first year.
Series first_difference(const Series& s);

DescriptiveStats describe(const Series& s);

} // namespace econ
