#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gfnn/data.hpp"
#include "gfnn/graph.hpp"
#include "gfnn/types.hpp"

namespace gfnn {

/// Weights of a (bias-free) model. Two-layer kinds use W1 (d x h) and
/// W2 (h x c); linear kinds leave W1 empty and use W2 as the d x c map.
struct ModelParams {
  Matrix W1;
  Matrix W2;

  bool has_hidden() const { return W1.size() > 0; }
};

struct TrainConfig {
  double lr = 0.2;
  int epochs = 50;
  int hidden = 32;
  std::uint64_t seed = 0;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  double weight_decay = 0.0;
};

enum class ModelType { MLP, LR, GCN, SGC, GFNN };

/// Model selector. The filter drives GFNN/SGC propagation (kind, gamma, k)
/// and names the per-layer operator for GCN (its k is ignored there).
struct ModelKind {
  ModelType type = ModelType::GFNN;
  FilterSpec filter{};
};

const char* to_string(ModelType type);
ModelType model_type_from_string(const std::string& name);
std::string model_name(const ModelKind& kind);

/// Glorot-uniform two-layer parameters, deterministic per seed.
ModelParams init_params(int d, int h, int c, std::uint64_t seed);

/// Single linear map d -> c (for LR and SGC).
ModelParams init_linear_params(int d, int c, std::uint64_t seed);

/// softmax(relu(X W1) W2); rows sum to one.
Matrix mlp_forward(const MatrixRef& X, const ModelParams& params);

/// softmax(A relu(A X W1) W2) with A the spec's propagation operator.
Matrix gcn_forward(const Graph& g, const FilterSpec& spec, const MatrixRef& X,
                   const ModelParams& params);

/// softmax(A^k X W2).
Matrix sgc_forward(const Graph& g, const FilterSpec& spec, const MatrixRef& X,
                   const ModelParams& params);

/// mlp_forward on A^k X: the filter runs once, outside any training loop.
Matrix gfnn_forward(const Graph& g, const FilterSpec& spec, const MatrixRef& X,
                    const ModelParams& params);

Matrix model_forward(const ModelKind& kind, const Graph& g, const MatrixRef& X,
                     const ModelParams& params);

/// Pre-softmax logits of any kind; exposed for linearity checks.
Matrix model_logits(const ModelKind& kind, const Graph& g, const MatrixRef& X,
                    const ModelParams& params);

/// Mean cross-entropy over the masked rows and its exact gradients.
struct LossGrads {
  double loss = 0.0;
  ModelParams grads;
};

LossGrads loss_and_grads(const ModelKind& kind, const Graph& g, const MatrixRef& X,
                         const IntVector& labels, const std::vector<int>& mask,
                         const ModelParams& params, double weight_decay = 0.0);

struct AdamState {
  Matrix m1, v1;  // W1 moments
  Matrix m2, v2;  // W2 moments
  long step = 0;
};

AdamState make_adam_state(const ModelParams& params);

/// Bias-corrected Adam update; params and state advance in place.
void adam_step(ModelParams& params, const ModelParams& grads, AdamState& state,
               const TrainConfig& config);

struct TrainHistory {
  std::vector<double> train_loss;
  std::vector<double> val_accuracy;
};

struct TrainResult {
  ModelParams params;
  TrainHistory history;
};

/// Full-batch training for config.epochs steps; no early stopping. The
/// returned parameters are deterministic given (kind, dataset, config).
TrainResult train(const ModelKind& kind, const Dataset& ds, const TrainConfig& config);

enum class Split { Train, Val, Test };

/// Fraction of split vertices whose argmax prediction matches the label;
/// argmax ties resolve to the lowest class index.
double evaluate(const ModelKind& kind, const Dataset& ds, const ModelParams& params,
                Split split);

/// Largest singular value via power iteration on W'W, relative tolerance 1e-8.
double max_singular_value(const MatrixRef& W);

void save_params(const std::filesystem::path& path, const ModelParams& params);
ModelParams load_params(const std::filesystem::path& path);

}  // namespace gfnn
