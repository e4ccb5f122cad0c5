#pragma once

#include <cstdint>

#include "gfnn/graph.hpp"
#include "gfnn/spectral.hpp"
#include "gfnn/types.hpp"

namespace gfnn {

/// M^k X computed as k successive sparse applications; k = 0 returns X.
Matrix propagate_k(const Graph& g, const FilterSpec& spec, const MatrixRef& X);

enum class LrlsMethod { Auto, Dense, ConjugateGradient };

/// Exact solution of the Laplacian-regularized least-squares problem,
/// (I + L_rw) Xbar = X, equivalently the graph filter (1+lambda)^{-1}.
/// Auto picks a dense solve for n <= 4000 and conjugate gradients beyond.
Matrix lrls_denoise(const Graph& g, double gamma, const MatrixRef& X,
                    LrlsMethod method = LrlsMethod::Auto);

/// Probability that a lazy random walk on the gamma-augmented graph returns
/// to a uniformly random start after 2k steps: tr(A_rw^{2k}) / n. Exact,
/// via n indicator-vector propagations.
double return_probability(const Graph& g, double gamma, int k);

/// Exact R(2k) from an eigenbasis: sum_i (1 - lambda_i)^{2k} / n.
double return_probability(const SpectralBasis& basis, int k);

struct ReturnProbEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t walks = 0;
};

/// Monte Carlo estimate from simulated walks; deterministic per seed and
/// independent across walk indices.
ReturnProbEstimate return_probability_mc(const Graph& g, double gamma, int k,
                                         std::int64_t walks, std::uint64_t seed);

/// Advisory filter order k* = max(1, ceil(log(log(1/delta) rho / epsilon))).
int optimal_k_estimate(double epsilon, double rho, double delta);

}  // namespace gfnn
