#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "gfnn/data.hpp"
#include "gfnn/models.hpp"
#include "gfnn/types.hpp"

namespace gfnn {

/// One result row: a (setting, model) cell with its per-seed metric values.
struct MetricRow {
  std::string setting;
  std::string model;
  std::string metric = "accuracy";
  std::vector<std::uint64_t> seeds;
  std::vector<double> values;
  double mean = 0.0;
  double stddev = 0.0;
  std::string note;

  bool passed() const { return note != "FAIL" && note != "SKIPPED"; }
};

/// Reproducible experiment output: config echo, seeded per-trial values, and
/// provenance. Serializes to report.json and curves.csv.
struct ExperimentReport {
  std::string id;
  nlohmann::json config;
  std::string timestamp;
  std::string version;
  std::vector<MetricRow> rows;

  nlohmann::json to_json() const;
  std::string curves_csv() const;
  const MetricRow* find(const std::string& setting, const std::string& model) const;
};

void write_report_files(const ExperimentReport& report, const std::filesystem::path& out_dir);

MetricRow summarize(std::string setting, std::string model,
                    std::vector<std::uint64_t> seeds, std::vector<double> values,
                    std::string metric = "accuracy");

struct SweepConfig {
  std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4};
  TrainConfig train{};
  int jobs = 1;
};

/// MLP, LR, GCN, SGC, and gfNN under each of the three filters.
std::vector<ModelKind> default_model_set();

/// Accuracy of a two-layer MLP (epochs=20) trained on noisy features
/// reconstructed from the k lowest frequencies, for each noise level and
/// each spectrum fraction. Includes a "raw" reference row per sigma.
ExperimentReport freq_sweep(const Dataset& ds, const std::vector<double>& sigmas,
                            const std::vector<double>& k_fractions, const SweepConfig& config);

/// Test accuracy per (model, sigma) with feature-space white noise.
ExperimentReport noise_sweep(const Dataset& ds, const std::vector<double>& sigmas,
                             const std::vector<ModelKind>& models, const SweepConfig& config);

struct TwoCirclesResult {
  ExperimentReport report;
  std::string predictions_csv;  // model,x,y,label,prediction
};

/// Trains MLP/GCN/SGC/gfNN on a generated two-circles dataset and dumps
/// per-vertex predictions for plotting.
TwoCirclesResult two_circles_experiment(int n, double noise_sd, const SweepConfig& config);

double default_two_circles_noise_sd();

/// Mean +/- std accuracy per (dataset, model) over `trials` random splits.
/// Missing dataset directories produce SKIPPED rows instead of failing.
/// gfNN rows additionally report the best filter as "gfnn-best".
ExperimentReport benchmark_table(const std::vector<std::filesystem::path>& dataset_dirs,
                                 const std::vector<ModelKind>& models, int trials,
                                 const SweepConfig& config);

struct TheoryCheckConfig {
  double epsilon = -1.0;  // max true-feature frequency; < 0 means 0.1 * lambda_max
  double sigma = 0.05;    // frequency-domain noise scale
  double delta = 0.2;     // failure probability
  double rho = 0.3;       // noise-to-signal bound E||Z|| <= rho ||Xbar||
  std::vector<int> k_list = {1, 2, 3, 4};
  int seeds = 20;
  double gamma = 1.0;
  int signal_cols = 8;
};

/// Empirical verification of the spectral-shrinking, bias-variance, filter
/// order, model-similarity, and truncation results on one graph. Every row
/// carries note PASS or FAIL.
ExperimentReport theory_checks(const Graph& g, const TheoryCheckConfig& cfg);

bool all_rows_passed(const ExperimentReport& report);

/// One bias-variance trial set: fraction of seeds where the filtered-noise
/// error stays under sqrt(k eps)||Xbar|| + 5 sqrt(log(1/delta) R(2k)) sigma sqrt(nd).
double lemma3_holds_fraction(const Graph& g, const SpectralBasis& basis, double epsilon,
                             double sigma, double delta, int k, int num_seeds,
                             std::uint64_t seed0, int signal_cols);

}  // namespace gfnn
