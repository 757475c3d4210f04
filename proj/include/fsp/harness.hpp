// harness.hpp: seeded sweep over (model, n, avg_degree) cells with one
// FSP step per generated graph, plus CSV and plot-data output.
#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsp/rng.hpp"

namespace fsp {

enum class Model : std::uint8_t { Rgg, Er };

std::string_view model_name(Model m) noexcept;
/// Accepts "rgg" or "er" (case-insensitive).
Model parse_model(std::string_view text);

struct ExperimentConfig {
    std::vector<Model> models{Model::Rgg, Model::Er};
    std::vector<std::size_t> n_values{1000, 5000, 10000};
    std::vector<double> degree_values{4, 8, 10, 16};
    std::size_t trials = 1000;
    MasterSeed master_seed{42};
    unsigned thread_count = 1;
    /// Wall-clock timings are not reproducible; off by default so the records CSV is.
    bool record_timing = false;
    /// When non-empty, every generated graph is written here as an edge list.
    std::string dump_graphs_dir;
};

/// Throws ParameterError for structurally unusable configs (no cells, zero trials).
void validate_config(const ExperimentConfig& config);

struct TrialRecord {
    Model model = Model::Rgg;
    std::size_t n = 0;
    double avg_degree = 0.0;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;  ///< seed of the graph stream
    std::optional<double> frac_before;
    std::optional<double> frac_after;
    std::optional<double> empirical_avg_degree;
    std::optional<double> wall_time_ms;
    /// Non-empty for the single row recorded when a cell's parameters are invalid.
    std::string error;
};

struct SummaryRow {
    Model model = Model::Rgg;
    std::size_t n = 0;
    double avg_degree = 0.0;
    std::size_t trials = 0;
    double mean_before = 0.0;
    double mean_after = 0.0;
    double median_after = 0.0;
    double q25_after = 0.0;
    double q75_after = 0.0;
};

struct Quartiles {
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
};

/// Median-of-halves (exclusive) quartiles: for odd counts the median is left
/// out of both halves. Requires a non-empty input.
Quartiles quartiles(std::vector<double> values);

/// Stream context label shared by every trial of a cell, e.g. "rgg|10000|10".
std::string cell_label(Model model, std::size_t n, double avg_degree);

/// Runs a single trial; exposed for reproduction of individual records.
TrialRecord run_trial(Model model, std::size_t n, double avg_degree, std::uint64_t trial,
                      MasterSeed master, bool record_timing = false, const std::string& dump_dir = {});

/// Records in cell-major, trial-minor order independent of thread_count.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);

/// One row per (model, n, avg_degree) in first-appearance order. Cells without
/// any defined fraction are left out and described in `warnings`.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records,
                                  std::vector<std::string>* warnings = nullptr);

inline constexpr std::string_view kRecordsHeader =
    "model,n,avg_degree,trial,seed,frac_before,frac_after,empirical_avg_degree,wall_time_ms";
inline constexpr std::string_view kSummaryHeader =
    "model,n,avg_degree,trials,mean_before,mean_after,median_after,q25_after,q75_after";

/// 10 significant digits, as written to every fraction column.
std::string format_fraction(double x);
/// Shortest decimal that round-trips to the same double.
std::string format_exact(double x);

void write_csv(const std::vector<TrialRecord>& records, std::ostream& out);
void write_csv(const std::vector<SummaryRow>& rows, std::ostream& out);
void write_csv(const std::vector<TrialRecord>& records, const std::string& path);
void write_csv(const std::vector<SummaryRow>& rows, const std::string& path);

/// Parses a records CSV produced by write_csv.
std::vector<TrialRecord> read_records_csv(std::istream& in);
std::vector<TrialRecord> read_records_csv(const std::string& path);

/// One whitespace-separated block per (model, n): avg_degree mean q25 q75,
/// blocks separated by two blank lines.
void emit_plot_data(const std::vector<SummaryRow>& rows, std::ostream& out);
void emit_plot_data(const std::vector<SummaryRow>& rows, const std::string& path);

} // namespace fsp
