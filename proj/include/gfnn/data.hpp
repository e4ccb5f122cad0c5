#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gfnn/graph.hpp"
#include "gfnn/spectral.hpp"
#include "gfnn/types.hpp"

namespace gfnn {

/// Vertex-classification dataset: graph, features (one row per vertex),
/// integer labels in [0, num_classes), and disjoint train/val/test splits.
struct Dataset {
  std::string name;
  Graph graph;
  Matrix X;
  IntVector labels;
  int num_classes = 0;
  std::vector<int> train_idx;
  std::vector<int> val_idx;
  std::vector<int> test_idx;

  int n() const { return graph.n; }
  int dim() const { return static_cast<int>(X.cols()); }
};

enum class NoiseDomain { Feature, Frequency };

struct NoiseSpec {
  double sigma = 0.0;
  std::uint64_t seed = 0;
  NoiseDomain domain = NoiseDomain::Feature;
};

/// Directory layout: meta.json, edges.tsv (u<TAB>v, u < v, sorted, unique),
/// features.csv, labels.txt, splits.json. Validates every invariant on load.
Dataset load_dataset(const std::filesystem::path& dir);

/// Writes the same layout load_dataset reads; round trips exactly.
void save_dataset(const Dataset& ds, const std::filesystem::path& dir);

struct PointCloud {
  Matrix points;  // n x 2
  IntVector labels;
};

/// n/2 points on a unit circle (label 0) and n/2 on a radius-0.5 circle
/// (label 1), evenly spaced in angle, each coordinate perturbed by
/// N(0, noise_sd^2). Deterministic per seed; n must be even.
PointCloud two_circles(int n, double noise_sd, std::uint64_t seed);

/// Union-symmetrized k-nearest-neighbor graph under Euclidean distance;
/// exact ties broken by vertex index.
Graph knn_graph(const MatrixRef& points, int k);

/// Feature-space white noise X + sigma N(0, 1) per entry.
Matrix add_noise(const MatrixRef& X, const NoiseSpec& spec);

/// Either domain; Frequency draws iid Gaussian frequency components and maps
/// them back through the inverse transform (requires a full basis).
Matrix add_noise(const SpectralBasis& basis, const MatrixRef& X, const NoiseSpec& spec);

struct SplitSizes {
  int train = 0;
  int val = 0;
  int test = 0;
};

/// Dataset with uniformly re-sampled disjoint splits of the given sizes.
Dataset random_split(const Dataset& ds, SplitSizes sizes, std::uint64_t seed);

/// Erdos-Renyi G(n, p). When link_isolated is set, degree-zero vertices get
/// one edge to a random other vertex so gamma = 0 operators stay defined.
Graph er_graph(int n, double p, std::uint64_t seed, bool link_isolated = true);

/// Two-circles points + kNN graph + default splits, packaged as a Dataset.
Dataset make_two_circles_dataset(int n, double noise_sd, int k, std::uint64_t seed,
                                 SplitSizes sizes);

}  // namespace gfnn
