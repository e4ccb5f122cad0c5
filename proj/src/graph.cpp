#include "gfnn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gfnn {

const char* to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::LeftNorm: return "leftnorm";
    case FilterKind::AugNormAdj: return "augnorm";
    case FilterKind::Bilateral: return "bilateral";
  }
  return "?";
}

FilterKind filter_kind_from_string(const std::string& name) {
  if (name == "leftnorm") return FilterKind::LeftNorm;
  if (name == "augnorm") return FilterKind::AugNormAdj;
  if (name == "bilateral") return FilterKind::Bilateral;
  throw std::invalid_argument("unknown filter kind: " + name);
}

Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  std::vector<std::pair<int, int>> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("self-loop in edge list at vertex " + std::to_string(u) +
                                  "; self-loops are expressed through gamma");
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.n = n;
  g.num_edges = static_cast<std::int64_t>(canon.size());
  std::vector<int> counts(n, 0);
  for (auto [u, v] : canon) {
    ++counts[u];
    ++counts[v];
  }
  g.offsets.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) g.offsets[i + 1] = g.offsets[i] + counts[i];
  g.neighbors.resize(g.offsets[n]);
  std::vector<int> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (auto [u, v] : canon) {
    g.neighbors[cursor[u]++] = v;
    g.neighbors[cursor[v]++] = u;
  }
  for (int i = 0; i < n; ++i)
    std::sort(g.neighbors.begin() + g.offsets[i], g.neighbors.begin() + g.offsets[i + 1]);
  g.degree = Vector(n);
  for (int i = 0; i < n; ++i) g.degree(i) = static_cast<double>(counts[i]);
  return g;
}

AugmentedDegrees augmented_degrees(const Graph& g, double gamma) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be non-negative");
  return {gamma, Vector(g.degree.array() + gamma)};
}

double variation(const Graph& g, const VectorRef& x) {
  if (x.size() != g.n) throw std::invalid_argument("signal length does not match vertex count");
  double acc = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int j : g.neighbors_of(i)) {
      if (j <= i) continue;  // each edge once
      double diff = x(i) - x(j);
      acc += diff * diff;
    }
  return acc;
}

double d_inner(const Graph& g, double gamma, const VectorRef& x, const VectorRef& y) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be non-negative");
  if (x.size() != g.n || y.size() != g.n)
    throw std::invalid_argument("signal length does not match vertex count");
  double acc = 0.0;
  for (int i = 0; i < g.n; ++i) acc += (g.degree(i) + gamma) * x(i) * y(i);
  return acc;
}

double d_norm(const Graph& g, double gamma, const VectorRef& x) {
  return std::sqrt(d_inner(g, gamma, x, x));
}

double d_norm(const Graph& g, double gamma, const MatrixRef& X) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be non-negative");
  if (X.rows() != g.n) throw std::invalid_argument("row count does not match vertex count");
  double acc = 0.0;
  for (int i = 0; i < g.n; ++i) acc += (g.degree(i) + gamma) * X.row(i).squaredNorm();
  return std::sqrt(acc);
}

namespace {

void check_apply_preconditions(const Graph& g, const FilterSpec& spec, const MatrixRef& X) {
  if (X.rows() != g.n) throw std::invalid_argument("feature rows do not match vertex count");
  if (spec.gamma < 0.0) throw std::invalid_argument("gamma must be non-negative");
  if (spec.kind == FilterKind::Bilateral || spec.gamma == 0.0) {
    // these operators normalize by raw degree (Bilateral) or by dtilde = d
    for (int i = 0; i < g.n; ++i)
      if (g.degree(i) == 0.0)
        throw std::invalid_argument("operator undefined: vertex " + std::to_string(i) +
                                    " is isolated and the normalization degree is zero");
  }
  if (spec.kind == FilterKind::Bilateral && (spec.alpha <= 0.0 || spec.alpha > 1.0))
    throw std::invalid_argument("Bilateral alpha must lie in (0, 1]");
}

}  // namespace

Matrix operator_apply(const Graph& g, const FilterSpec& spec, const MatrixRef& X) {
  check_apply_preconditions(g, spec, X);
  const int n = g.n;
  const Eigen::Index d = X.cols();
  Matrix Y(n, d);
  switch (spec.kind) {
    case FilterKind::LeftNorm: {
      // Row i: (sum of neighbor rows + gamma * own row) / dtilde(i). The
      // final division (not a reciprocal multiply) keeps constant columns
      // exact fixed points.
      for (Eigen::Index c = 0; c < d; ++c)
        for (int i = 0; i < n; ++i) {
          double acc = spec.gamma * X(i, c);
          for (int j : g.neighbors_of(i)) acc += X(j, c);
          Y(i, c) = acc / (g.degree(i) + spec.gamma);
        }
      break;
    }
    case FilterKind::AugNormAdj: {
      Vector s = (g.degree.array() + spec.gamma).rsqrt();
      for (Eigen::Index c = 0; c < d; ++c)
        for (int i = 0; i < n; ++i) {
          double acc = spec.gamma * s(i) * X(i, c);
          for (int j : g.neighbors_of(i)) acc += s(j) * X(j, c);
          Y(i, c) = s(i) * acc;
        }
      break;
    }
    case FilterKind::Bilateral: {
      Vector s = g.degree.array().rsqrt();
      for (Eigen::Index c = 0; c < d; ++c)
        for (int i = 0; i < n; ++i) {
          double acc = 0.0;
          for (int j : g.neighbors_of(i)) acc += s(j) * X(j, c);
          Y(i, c) = spec.alpha * s(i) * acc;
        }
      break;
    }
  }
  return Y;
}

Matrix operator_apply_transpose(const Graph& g, const FilterSpec& spec, const MatrixRef& X) {
  if (spec.kind != FilterKind::LeftNorm) return operator_apply(g, spec, X);  // symmetric kinds
  check_apply_preconditions(g, spec, X);
  const int n = g.n;
  const Eigen::Index d = X.cols();
  // (Dtilde^{-1} Atilde)' = Atilde Dtilde^{-1}: scale rows first, then gather.
  Vector inv_dt = (g.degree.array() + spec.gamma).inverse();
  Matrix Y(n, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (int i = 0; i < n; ++i) {
      double acc = spec.gamma * inv_dt(i) * X(i, c);
      for (int j : g.neighbors_of(i)) acc += inv_dt(j) * X(j, c);
      Y(i, c) = acc;
    }
  return Y;
}

}  // namespace gfnn
