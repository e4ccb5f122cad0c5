#pragma once

#include <functional>
#include <iosfwd>

#include "gfnn/graph.hpp"
#include "gfnn/types.hpp"

namespace gfnn {

/// Generalized eigenpairs of (L, Dtilde): L u_i = lambda_i Dtilde u_i, with
/// lambdas ascending and U columns Dtilde-orthonormal (U' Dtilde U = I). A
/// partial basis holds only the smallest pairs. Eigenvector signs are fixed
/// by making each column's largest-magnitude entry positive.
struct SpectralBasis {
  double gamma = 0.0;
  Vector lambdas;  // ascending, in [0, 2]
  Matrix U;        // n x count()
  Vector dtilde;

  int n() const { return static_cast<int>(U.rows()); }
  int count() const { return static_cast<int>(U.cols()); }
  bool is_full() const { return count() == n(); }
};

/// Per-frequency energy of a feature matrix: energy(i) = ||xhat(lambda_i)||^2.
/// For a full basis the energies sum to ||X||^2_Dtilde (Parseval).
struct FrequencyProfile {
  Vector lambdas;
  Vector energy;
  Vector cumulative_fraction;
  double total_energy = 0.0;
  double tau = 0.0;
  double lambda_star = 0.0;  // smallest frequency holding a (1-tau) energy share
};

/// Full decomposition via the symmetric reduction Dtilde^{-1/2} L Dtilde^{-1/2}.
/// Requires gamma > 0 or a graph without isolated vertices.
SpectralBasis eigenbasis(const Graph& g, double gamma);

/// k smallest pairs via Lanczos with full reorthogonalization.
SpectralBasis eigenbasis_partial(const Graph& g, double gamma, int k);

/// Graph Fourier transform Xhat = U' Dtilde X. Row i of the result is the
/// frequency component at lambda_i.
Matrix gft(const SpectralBasis& basis, const MatrixRef& X);

/// Inverse transform U Xhat.
Matrix igft(const SpectralBasis& basis, const MatrixRef& Xhat);

/// Keeps the k lowest-frequency components of X and maps back to the vertex
/// domain: the best Dtilde-norm rank-k low-frequency approximation.
Matrix truncate_reconstruct(const SpectralBasis& basis, const MatrixRef& X, int k);

/// Applies the graph filter with spectral multiplier h: U diag(h(lambda)) U' Dtilde X.
Matrix spectral_filter_apply(const SpectralBasis& basis, const MatrixRef& X,
                             const std::function<double(double)>& h);

FrequencyProfile frequency_profile(const SpectralBasis& basis, const MatrixRef& X,
                                   double tau = 0.01);

/// CSV rows "index,lambda,energy".
void write_profile_csv(std::ostream& out, const FrequencyProfile& profile);

}  // namespace gfnn
