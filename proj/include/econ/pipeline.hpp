#pragma once

#include "econ/dataset.hpp"
#include "econ/johansen.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace econ {

struct PipelineConfig {
    std::string data_path;
    std::string output_dir = ".";
    std::vector<std::string> columns;  // CSV columns, in order
    std::string log_column;            // which column gets the log transform
    int max_lag = 3;
    int significance_pct = 5;
    double weak_exogeneity_level = 0.10;
    DetCase johansen_case = DetCase::RestrictedConstant;
    int horizon = 9;
    int bootstrap_replications = 1000;
    std::uint64_t seed = 20190101;
    bool granger_differences = true;
    int granger_lag = 2;
    int portmanteau_h = 10;
    int arch_lags = 5;

    static PipelineConfig from_file(const std::string& path);
};

/// One emitted table: named rows x named columns of doubles, with
/// optional per-cell significance markers.
struct Table {
    std::string name;
    std::vector<std::string> column_names;
    std::vector<std::string> row_names;
    std::vector<std::vector<double>> cells;
    std::vector<std::vector<std::string>> marks; // empty or same shape

    void add_row(const std::string& rname, std::vector<double> values,
                 std::vector<std::string> row_marks = {});
};

struct StudyReport {
    std::vector<Table> tables;       // stable order and names
    std::vector<std::string> decisions;
    std::vector<std::string> skipped; // stage name + reason
    bool complete = false;
    std::string failure_stage;
    std::string failure_message;
};

StudyReport run_pipeline(const PipelineConfig& config);

/// One CSV per table (stable file names) or a single JSON bundle.
void emit_report_csv(const StudyReport& report, const std::string& dir);
void emit_report_json(const StudyReport& report, const std::string& path);

} // namespace econ
