#pragma once

#include "econ/series.hpp"

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace econ {

/// An aligned collection of annual series sharing one time index.
class Dataset {
public:
    explicit Dataset(std::vector<Series> series);

    int T() const { return static_cast<int>(series_.front().size()); }
    int k() const { return static_cast<int>(series_.size()); }
    const std::vector<Series>& series() const { return series_; }
    const Series& at(const std::string& name) const;
    const Series& at(int i) const { return series_.at(i); }
    bool has(const std::string& name) const;
    int index_of(const std::string& name) const;
    std::vector<std::string> names() const;
    const std::vector<int>& years() const { return series_.front().years(); }

    /// T x k matrix, columns in dataset order.
    Eigen::MatrixXd matrix() const;

    /// New dataset with the named columns, in the given order.
    Dataset subset(const std::vector<std::string>& keep) const;

    /// Replace a column with a transformed series of equal length.
    Dataset with_replaced(const std::string& name, Series s) const;

    /// Dataset of first differences of every column (one year shorter).
    Dataset differenced() const;

    static Dataset from_matrix(const Eigen::MatrixXd& m,
                               const std::vector<std::string>& names,
                               int start_year = 1);

private:
    std::vector<Series> series_;
};

/// Reads a wide-format CSV (year + numeric columns). column_spec maps
/// series name -> CSV column header; order of column_spec is preserved.
Dataset load_csv(const std::string& path,
                 const std::vector<std::pair<std::string, std::string>>& column_spec);

/// Reads every column after the year column, in file order.
Dataset load_csv(const std::string& path);

/// Writes a dataset back out in the same wide format.
void save_csv(const Dataset& d, const std::string& path);

} // namespace econ
