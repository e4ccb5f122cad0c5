#include "gfnn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <Eigen/Dense>

#include "gfnn/rng.hpp"

namespace gfnn {

namespace {

void require_invertible_dtilde(const Graph& g, double gamma) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be non-negative");
  if (gamma > 0.0) return;
  for (int i = 0; i < g.n; ++i)
    if (g.degree(i) == 0.0)
      throw std::invalid_argument(
          "eigenbasis with gamma = 0 requires a graph without isolated vertices");
}

// y = N x with N = I - Dtilde^{-1/2} Atilde Dtilde^{-1/2}, applied sparsely.
Vector normalized_laplacian_apply(const Graph& g, double gamma, const Vector& s,
                                  const Vector& x) {
  Vector y(g.n);
  for (int i = 0; i < g.n; ++i) {
    double acc = gamma * s(i) * x(i);
    for (int j : g.neighbors_of(i)) acc += s(j) * x(j);
    y(i) = x(i) - s(i) * acc;
  }
  return y;
}

// Largest-magnitude entry positive; index ties resolve to the first maximum.
void fix_signs(Matrix& U) {
  for (Eigen::Index c = 0; c < U.cols(); ++c) {
    Eigen::Index idx = 0;
    U.col(c).cwiseAbs().maxCoeff(&idx);
    if (U(idx, c) < 0.0) U.col(c) = -U.col(c);
  }
}

SpectralBasis basis_from_normalized(const Graph& g, double gamma, const Vector& lambdas,
                                    const Matrix& V) {
  SpectralBasis basis;
  basis.gamma = gamma;
  basis.lambdas = lambdas.cwiseMax(0.0);  // clamp -1e-16-style round-off
  basis.dtilde = Vector(g.degree.array() + gamma);
  basis.U = basis.dtilde.array().rsqrt().matrix().asDiagonal() * V;
  fix_signs(basis.U);
  return basis;
}

}  // namespace

SpectralBasis eigenbasis(const Graph& g, double gamma) {
  require_invertible_dtilde(g, gamma);
  const int n = g.n;
  Vector s = (g.degree.array() + gamma).rsqrt();
  Matrix N = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors_of(i)) N(i, j) -= s(i) * s(j);
    N(i, i) -= gamma * s(i) * s(i);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(N);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense symmetric eigendecomposition failed");
  return basis_from_normalized(g, gamma, solver.eigenvalues(), solver.eigenvectors());
}

SpectralBasis eigenbasis_partial(const Graph& g, double gamma, int k) {
  require_invertible_dtilde(g, gamma);
  const int n = g.n;
  if (k < 1 || k > n) throw std::invalid_argument("partial eigenbasis needs 1 <= k <= n");
  Vector s = (g.degree.array() + gamma).rsqrt();

  int m = std::min(n, std::max(2 * k + 30, 40));
  const double tol = 1e-9;
  while (true) {
    if (m >= n) {
      // Krylov space would span everything; the dense path is both simpler
      // and exact here.
      SpectralBasis full = eigenbasis(g, gamma);
      SpectralBasis part;
      part.gamma = gamma;
      part.dtilde = full.dtilde;
      part.lambdas = full.lambdas.head(k);
      part.U = full.U.leftCols(k);
      return part;
    }

    // Lanczos with full reorthogonalization on the symmetric operator.
    Matrix V(n, m);
    Vector alpha(m), beta(m);
    auto rng = make_rng(0x9d2c5680ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = gauss(rng);
    v.normalize();
    V.col(0) = v;
    int built = m;
    for (int j = 0; j < m; ++j) {
      Vector w = normalized_laplacian_apply(g, gamma, s, V.col(j));
      alpha(j) = V.col(j).dot(w);
      w -= alpha(j) * V.col(j);
      if (j > 0) w -= beta(j - 1) * V.col(j - 1);
      // two reorthogonalization sweeps keep the basis orthonormal to
      // machine precision
      for (int sweep = 0; sweep < 2; ++sweep)
        w -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * w);
      double norm = w.norm();
      if (j + 1 < m) {
        if (norm < 1e-12) {
          // invariant subspace found; restart with a fresh orthogonal vector
          Vector f(n);
          for (int i = 0; i < n; ++i) f(i) = gauss(rng);
          for (int sweep = 0; sweep < 2; ++sweep)
            f -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * f);
          double fn = f.norm();
          if (fn < 1e-12) {
            built = j + 1;  // space exhausted
            break;
          }
          beta(j) = 0.0;
          V.col(j + 1) = f / fn;
        } else {
          beta(j) = norm;
          V.col(j + 1) = w / norm;
        }
      }
    }

    Matrix T = Matrix::Zero(built, built);
    for (int j = 0; j < built; ++j) {
      T(j, j) = alpha(j);
      if (j + 1 < built) {
        T(j, j + 1) = beta(j);
        T(j + 1, j) = beta(j);
      }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> small(T);
    Matrix ritz = V.leftCols(built) * small.eigenvectors();

    if (built >= k) {
      bool converged = true;
      for (int i = 0; i < k && converged; ++i) {
        Vector r = normalized_laplacian_apply(g, gamma, s, ritz.col(i)) -
                   small.eigenvalues()(i) * ritz.col(i);
        converged = r.norm() <= tol;
      }
      if (converged)
        return basis_from_normalized(g, gamma, small.eigenvalues().head(k),
                                     ritz.leftCols(k));
    }
    m = std::min(n, 2 * m);
  }
}

Matrix gft(const SpectralBasis& basis, const MatrixRef& X) {
  if (X.rows() != basis.n()) throw std::invalid_argument("feature rows do not match basis");
  return basis.U.transpose() * (basis.dtilde.asDiagonal() * X);
}

Matrix igft(const SpectralBasis& basis, const MatrixRef& Xhat) {
  if (Xhat.rows() != basis.count())
    throw std::invalid_argument("frequency rows do not match basis size");
  return basis.U * Xhat;
}

Matrix truncate_reconstruct(const SpectralBasis& basis, const MatrixRef& X, int k) {
  if (k < 1 || k > basis.count())
    throw std::invalid_argument("truncation order out of range");
  auto Uk = basis.U.leftCols(k);
  return Uk * (Uk.transpose() * (basis.dtilde.asDiagonal() * X));
}

Matrix spectral_filter_apply(const SpectralBasis& basis, const MatrixRef& X,
                             const std::function<double(double)>& h) {
  Matrix Xhat = gft(basis, X);
  for (int i = 0; i < basis.count(); ++i) Xhat.row(i) *= h(basis.lambdas(i));
  return igft(basis, Xhat);
}

FrequencyProfile frequency_profile(const SpectralBasis& basis, const MatrixRef& X,
                                   double tau) {
  Matrix Xhat = gft(basis, X);
  FrequencyProfile profile;
  profile.lambdas = basis.lambdas;
  profile.tau = tau;
  profile.energy = Xhat.rowwise().squaredNorm();
  profile.total_energy = profile.energy.sum();
  profile.cumulative_fraction = Vector::Zero(basis.count());
  double cum = 0.0;
  double threshold = (1.0 - tau) * profile.total_energy;
  profile.lambda_star = basis.lambdas(basis.count() - 1);
  bool found = false;
  for (int i = 0; i < basis.count(); ++i) {
    cum += profile.energy(i);
    profile.cumulative_fraction(i) = profile.total_energy > 0 ? cum / profile.total_energy : 0.0;
    if (!found && cum >= threshold) {
      profile.lambda_star = basis.lambdas(i);
      found = true;
    }
  }
  return profile;
}

void write_profile_csv(std::ostream& out, const FrequencyProfile& profile) {
  out << "index,lambda,energy\n";
  char buf[96];
  for (int i = 0; i < profile.lambdas.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", i, profile.lambdas(i),
                  profile.energy(i));
    out << buf;
  }
}

}  // namespace gfnn
