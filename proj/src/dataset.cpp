#include "econ/dataset.hpp"

#include "econ/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace econ {

Dataset::Dataset(std::vector<Series> series) : series_(std::move(series)) {
    if (series_.empty()) {
        throw IngestionError("dataset has no series");
    }
    std::set<std::string> names;
    for (const auto& s : series_) {
        if (!names.insert(s.name()).second) {
            throw IngestionError("duplicate series name '" + s.name() + "'");
        }
        if (s.years() != series_.front().years()) {
            throw IngestionError("series '" + s.name() +
                                 "' is not aligned with the shared time index");
        }
    }
}

const Series& Dataset::at(const std::string& name) const {
    for (const auto& s : series_) {
        if (s.name() == name) return s;
    }
    throw InvalidArgumentError("no series named '" + name + "'");
}

bool Dataset::has(const std::string& name) const {
    return std::any_of(series_.begin(), series_.end(),
                       [&](const Series& s) { return s.name() == name; });
}

int Dataset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < series_.size(); ++i) {
        if (series_[i].name() == name) return static_cast<int>(i);
    }
    throw InvalidArgumentError("no series named '" + name + "'");
}

std::vector<std::string> Dataset::names() const {
    std::vector<std::string> out;
    out.reserve(series_.size());
    for (const auto& s : series_) out.push_back(s.name());
    return out;
}

Eigen::MatrixXd Dataset::matrix() const {
    Eigen::MatrixXd m(T(), k());
    for (int j = 0; j < k(); ++j) {
        m.col(j) = series_[j].vector();
    }
    return m;
}

Dataset Dataset::subset(const std::vector<std::string>& keep) const {
    std::vector<Series> out;
    out.reserve(keep.size());
    for (const auto& name : keep) out.push_back(at(name));
    return Dataset(std::move(out));
}

Dataset Dataset::with_replaced(const std::string& name, Series s) const {
    std::vector<Series> out = series_;
    out[static_cast<std::size_t>(index_of(name))] = std::move(s);
    return Dataset(std::move(out));
}

Dataset Dataset::differenced() const {
    std::vector<Series> out;
    out.reserve(series_.size());
    for (const auto& s : series_) out.push_back(first_difference(s));
    return Dataset(std::move(out));
}

Dataset Dataset::from_matrix(const Eigen::MatrixXd& m,
                             const std::vector<std::string>& names,
                             int start_year) {
    if (static_cast<long>(names.size()) != m.cols()) {
        throw InvalidArgumentError("from_matrix: name count does not match columns");
    }
    std::vector<int> years(static_cast<std::size_t>(m.rows()));
    for (long t = 0; t < m.rows(); ++t) years[static_cast<std::size_t>(t)] = start_year + static_cast<int>(t);
    std::vector<Series> out;
    for (long j = 0; j < m.cols(); ++j) {
        std::vector<double> v(m.rows());
        for (long t = 0; t < m.rows(); ++t) v[static_cast<std::size_t>(t)] = m(t, j);
        out.emplace_back(names[static_cast<std::size_t>(j)], std::move(v), years);
    }
    return Dataset(std::move(out));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, ',')) {
        // trim whitespace and CR
        auto b = cur.find_first_not_of(" \t\r");
        auto e = cur.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_cell(const std::string& cell, int row, const std::string& col) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw IngestionError("row " + std::to_string(row) + ", column '" + col +
                             "': cannot parse '" + cell + "' as a number");
    }
    return v;
}

} // namespace

Dataset load_csv(const std::string& path,
                 const std::vector<std::pair<std::string, std::string>>& column_spec) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw IngestionError("'" + path + "' is empty");
    }
    const auto header = split_csv_line(line);
    if (header.empty()) {
        throw SchemaError("'" + path + "': empty header row");
    }
    std::vector<int> col_index;
    for (const auto& [name, col] : column_spec) {
        auto it = std::find(header.begin() + 1, header.end(), col);
        if (it == header.end()) {
            throw SchemaError("'" + path + "': missing column '" + col + "'");
        }
        col_index.push_back(static_cast<int>(it - header.begin()));
    }

    std::vector<int> years;
    std::vector<std::vector<double>> cols(column_spec.size());
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() < header.size()) {
            throw IngestionError("row " + std::to_string(row) +
                                 ": expected " + std::to_string(header.size()) +
                                 " cells, got " + std::to_string(cells.size()));
        }
        const int year = static_cast<int>(parse_cell(cells[0], row, header[0]));
        if (!years.empty() && year <= years.back()) {
            if (std::find(years.begin(), years.end(), year) != years.end()) {
                throw IngestionError("duplicate year " + std::to_string(year) +
                                     " at row " + std::to_string(row));
            }
            throw IngestionError("years out of order at row " + std::to_string(row));
        }
        years.push_back(year);
        for (std::size_t j = 0; j < col_index.size(); ++j) {
            const auto& cell = cells[static_cast<std::size_t>(col_index[j])];
            if (cell.empty()) {
                throw IngestionError("row " + std::to_string(row) + ", column '" +
                                     column_spec[j].second + "': missing value");
            }
            cols[j].push_back(parse_cell(cell, row, column_spec[j].second));
        }
    }
    if (years.empty()) {
        throw IngestionError("'" + path + "' has no data rows");
    }
    std::vector<Series> series;
    for (std::size_t j = 0; j < column_spec.size(); ++j) {
        series.emplace_back(column_spec[j].first, std::move(cols[j]), years);
    }
    return Dataset(std::move(series));
}

Dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw IngestionError("'" + path + "' is empty");
    }
    const auto header = split_csv_line(line);
    std::vector<std::pair<std::string, std::string>> spec;
    for (std::size_t j = 1; j < header.size(); ++j) {
        spec.emplace_back(header[j], header[j]);
    }
    if (spec.empty()) {
        throw SchemaError("'" + path + "': no data columns after the year column");
    }
    return load_csv(path, spec);
}

void save_csv(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    out << "year";
    for (const auto& s : d.series()) out << ',' << s.name();
    out << '\n';
    out.precision(17);
    for (int t = 0; t < d.T(); ++t) {
        out << d.years()[static_cast<std::size_t>(t)];
        for (const auto& s : d.series()) out << ',' << s[static_cast<std::size_t>(t)];
        out << '\n';
    }
}

} // namespace econ
