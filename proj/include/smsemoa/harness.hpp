#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "smsemoa/engine.hpp"
#include "smsemoa/stats.hpp"

namespace smsemoa {

enum class ExperimentId { table2, table3, table4, fronts, custom };

std::string to_string(ExperimentId id);
ExperimentId parse_experiment_id(const std::string& name);

struct SizeRuns {
    std::size_t n = 0;
    std::size_t runs = 0;
};

struct ExperimentSpec {
    ExperimentId id = ExperimentId::custom;
    // table2/table3: the benchmark id. table4 and fronts: any of KP, NK, TSP, QAP.
    std::vector<std::string> problems;
    std::vector<SizeRuns> cells;
    // Generation cap for the runtime tables; evaluation budget (initial
    // population included) for the practical problems.
    std::uint64_t budget = 0;
    std::vector<Variant> variants;
    std::uint64_t base_seed = 0;
    std::filesystem::path out_dir;
    // Multiplier applied to the full protocol's runs (and practical budgets).
    double scale = 1.0;
    // Worker threads; 0 picks the hardware concurrency.
    std::size_t threads = 0;
    std::size_t reference_samples = reference_sample_count;
    // A runtime cell is censored when more than this fraction of its runs hit the cap.
    double censor_fraction = 0.0;

    // Throws std::invalid_argument unless runs >= 1 everywhere and scale is in (0, 1].
    void validate() const;
};

// Protocol used when no scale is requested: table2/table3 at n=15 (1000 runs)
// and n=20 (200 runs), table4 and the fronts at size 100 with 10^5
// evaluations and 10 runs (1 run for the fronts).
ExperimentSpec desk_spec(ExperimentId id);
// The full protocol: n in {15,20,25,30} x 1000 runs; sizes {100,200,500} x 30
// runs with 10^7 evaluations.
ExperimentSpec full_spec(ExperimentId id);
// Full protocol with runs and practical budgets multiplied by `scale`.
ExperimentSpec scaled_spec(ExperimentId id, double scale);
void override_runs(ExperimentSpec& spec, std::size_t runs);

// One run's outcome. `metric` is "generations" or "hv".
struct ResultRow {
    std::string experiment;
    std::string problem;
    std::size_t n = 0;
    std::string variant;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::string metric;
    double value = 0.0;
    bool covered = false;
    bool censored = false;

    bool operator==(const ResultRow&) const = default;
};

inline constexpr const char* results_csv_header = "experiment,problem,n,variant,run,seed,metric,value,covered,censored";

// Shortest decimal that reads back to the same double.
std::string format_double(double v);

void write_results_csv(std::ostream& out, std::span<const ResultRow> rows);
// Throws std::invalid_argument on a malformed document.
std::vector<ResultRow> read_results_csv(std::istream& in);
void save_results_csv(const std::filesystem::path& path, std::span<const ResultRow> rows);
std::vector<ResultRow> load_results_csv(const std::filesystem::path& path);

// Mean generations of one (problem, n, variant) cell.
struct RuntimeCell {
    std::string problem;
    std::size_t n = 0;
    std::string variant;
    std::size_t runs = 0;
    double mean = 0.0;
    double std = 0.0;
    std::size_t censored_runs = 0;
    bool censored = false; // printed as "-"
};

// A versus AR on one practical instance.
struct HvComparison {
    std::string problem;
    std::size_t n = 0;
    std::size_t runs = 0;
    MeanStd archive_only;
    MeanStd archive_reuse;
    double p = 1.0;
    bool significant = false; // p below alpha
};

// Pure folds over persisted rows; cells keep first-seen order.
std::vector<RuntimeCell> summarize_runtime(std::span<const ResultRow> rows, double censor_fraction = 0.0);
std::vector<HvComparison> summarize_hv(std::span<const ResultRow> rows, double alpha = 0.05);

// Plain-text summary tables.
std::string format_runtime_table(std::span<const RuntimeCell> cells);
std::string format_hv_table(std::span<const HvComparison> cells);

// Final archive of one practical run, in the problem's own orientation.
struct FrontSeries {
    std::string problem;
    std::size_t n = 0;
    std::string variant;
    Orientation orientation = Orientation::maximize;
    std::vector<std::array<double, 2>> points;
};

void write_fronts_csv(std::ostream& out, std::span<const FrontSeries> series);
std::vector<FrontSeries> read_fronts_csv(std::istream& in);

// Scatter plot, one panel per (problem, n), one marker style per variant.
std::string render_front_svg(std::span<const FrontSeries> series);
void emit_front_plot(std::span<const FrontSeries> series, const std::filesystem::path& path);

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<ResultRow> rows;
    std::vector<FrontSeries> fronts;
    nlohmann::json manifest;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

ExperimentResult run_table2(const ExperimentSpec& spec, const ProgressFn& progress = {});
ExperimentResult run_table3(const ExperimentSpec& spec, const ProgressFn& progress = {});
ExperimentResult run_table4(const ExperimentSpec& spec, const ProgressFn& progress = {});
ExperimentResult run_fronts(const ExperimentSpec& spec, const ProgressFn& progress = {});
ExperimentResult run_experiment(const ExperimentSpec& spec, const ProgressFn& progress = {});

// results.csv, summary.csv, manifest.json, and for practical runs fronts.csv
// plus fronts.svg, all under spec.out_dir. Throws IoError.
void write_experiment_outputs(const ExperimentResult& result);

// Seed of run `run` in the size-`n` cell; shared by all variants.
std::uint64_t run_seed(std::uint64_t base_seed, std::size_t n, std::size_t run);
// Seed of the generated instance for a practical problem at size `n`.
std::uint64_t instance_seed(std::uint64_t base_seed, const std::string& problem, std::size_t n);

// Engine settings of the practical experiments for `problem` (KP, NK, TSP, QAP).
EngineConfig practical_config(const std::string& problem, Variant variant, std::uint64_t seed,
                              std::uint64_t evaluation_budget);

} // namespace smsemoa
