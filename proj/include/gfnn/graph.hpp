#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gfnn/types.hpp"

namespace gfnn {

/// Simple undirected graph with unit edge weights, stored as CSR neighbor
/// lists. Immutable after construction; safe to share across threads.
struct Graph {
  int n = 0;
  std::vector<int> offsets;    // size n+1
  std::vector<int> neighbors;  // size 2*num_edges, sorted within each row
  Vector degree;               // d(i) = |neighbors(i)|
  std::int64_t num_edges = 0;  // each undirected edge counted once

  std::span<const int> neighbors_of(int i) const {
    return {neighbors.data() + offsets[i], neighbors.data() + offsets[i + 1]};
  }
};

/// Degrees of the self-loop-augmented graph: dtilde(i) = d(i) + gamma.
struct AugmentedDegrees {
  double gamma = 0.0;
  Vector dtilde;
};

/// Propagation operators. LeftNorm is the row-normalized augmented adjacency,
/// AugNormAdj its symmetric sibling, Bilateral the plain normalized adjacency
/// scaled by alpha (ignores gamma).
enum class FilterKind { LeftNorm, AugNormAdj, Bilateral };

struct FilterSpec {
  FilterKind kind = FilterKind::LeftNorm;
  double gamma = 1.0;
  int k = 2;
  double alpha = 1.0;  // Bilateral only
};

const char* to_string(FilterKind kind);
FilterKind filter_kind_from_string(const std::string& name);

/// Builds a deduplicated, symmetrized graph from an edge list. Endpoints must
/// lie in [0, n); self-loop pairs are rejected (self-loops enter only through
/// gamma).
Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n);

AugmentedDegrees augmented_degrees(const Graph& g, double gamma);

/// Smoothness of a signal: sum over edges of (x(i) - x(j))^2 = x' L x.
double variation(const Graph& g, const VectorRef& x);

/// Degree-weighted inner product sum_i (d(i)+gamma) x(i) y(i).
double d_inner(const Graph& g, double gamma, const VectorRef& x, const VectorRef& y);

double d_norm(const Graph& g, double gamma, const VectorRef& x);

/// Frobenius-style norm of a feature matrix under the degree weighting,
/// sqrt(tr(X' Dtilde X)).
double d_norm(const Graph& g, double gamma, const MatrixRef& X);

/// One application of the propagation operator named by spec (its k is
/// ignored here): returns M X without ever densifying M. Cost O((|E|+n) d).
Matrix operator_apply(const Graph& g, const FilterSpec& spec, const MatrixRef& X);

/// M' X; distinct from operator_apply only for LeftNorm.
Matrix operator_apply_transpose(const Graph& g, const FilterSpec& spec, const MatrixRef& X);

}  // namespace gfnn
