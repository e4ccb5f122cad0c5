#pragma once

#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gfnn/graph.hpp"

// Dense reference constructions used as oracles. These build matrices
// directly from edge lists / adjacency and never go through the CSR paths
// under test.
namespace oracle {

inline Eigen::MatrixXd dense_adjacency(const gfnn::Graph& g) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j : g.neighbors_of(i)) A(i, j) = 1.0;
  return A;
}

inline Eigen::MatrixXd dense_laplacian(const gfnn::Graph& g) {
  Eigen::MatrixXd A = dense_adjacency(g);
  return Eigen::MatrixXd(A.rowwise().sum().asDiagonal()) - A;
}

inline Eigen::VectorXd dense_dtilde(const gfnn::Graph& g, double gamma) {
  Eigen::MatrixXd A = dense_adjacency(g);
  return A.rowwise().sum().array() + gamma;
}

// The three propagation matrices, built densely.
inline Eigen::MatrixXd dense_operator(const gfnn::Graph& g, const gfnn::FilterSpec& spec) {
  Eigen::MatrixXd A = dense_adjacency(g);
  Eigen::VectorXd d = A.rowwise().sum();
  switch (spec.kind) {
    case gfnn::FilterKind::LeftNorm: {
      Eigen::MatrixXd At = A + spec.gamma * Eigen::MatrixXd::Identity(g.n, g.n);
      Eigen::VectorXd dt = d.array() + spec.gamma;
      return dt.cwiseInverse().asDiagonal() * At;
    }
    case gfnn::FilterKind::AugNormAdj: {
      Eigen::MatrixXd At = A + spec.gamma * Eigen::MatrixXd::Identity(g.n, g.n);
      Eigen::VectorXd s = (d.array() + spec.gamma).rsqrt();
      return s.asDiagonal() * At * s.asDiagonal();
    }
    case gfnn::FilterKind::Bilateral: {
      Eigen::VectorXd s = d.array().rsqrt();
      return spec.alpha * (s.asDiagonal() * A * s.asDiagonal());
    }
  }
  return {};
}

// Erdos-Renyi-ish random test graph guaranteed connected enough for
// degree-normalized operators (isolated vertices get a pendant edge).
inline gfnn::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.emplace_back(i, j);
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int i = 0; i < n; ++i)
    if (deg[i] == 0) {
      int j = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      if (j >= i) ++j;
      edges.emplace_back(i, j);
      ++deg[i];
      ++deg[j];
    }
  return gfnn::build_graph(edges, n);
}

inline Eigen::MatrixXd random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd X(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) X(i, j) = gauss(rng);
  return X;
}

}  // namespace oracle
