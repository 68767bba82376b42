// Copyright 2026 The dualgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUALGAME_QCORE_HPP
#define DUALGAME_QCORE_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dualgame/common.hpp"

namespace dualgame {

/// True when every entry of `m` is finite.
inline bool all_finite(const Matrix& m) {
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      Complex z = m(r, c);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

/// Largest entrywise deviation of `m` from its own adjoint.
inline double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Normalized pure state on an explicit tensor-factor layout.
///
/// Amplitudes are stored against the row-major composite index: with factors
/// (d0, d1) the basis vector |a>|b> sits at index a*d1 + b.  Keeping the
/// factor list with the amplitudes lets reduced states be taken later
/// without re-deriving how the space was assembled.
class PureState {
 public:
  PureState(std::vector<Index> dims, Vector amplitudes)
      : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    if (dims_.empty()) throw StateError("pure state needs at least one tensor factor");
    Index total = 1;
    for (Index d : dims_) {
      if (d < 1) throw StateError("tensor factor dimensions must be positive");
      total *= d;
    }
    if (total != amps_.size()) {
      throw StateError("amplitude count " + std::to_string(amps_.size()) +
                       " does not match factor product " + std::to_string(total));
    }
    if (static_cast<std::size_t>(total) > max_dimension()) {
      throw DimensionError("state dimension " + std::to_string(total) +
                           " exceeds cap " + std::to_string(max_dimension()));
    }
    if (!all_finite(amps_)) throw StateError("amplitudes must be finite");
    double nrm = amps_.norm();
    if (std::abs(nrm - 1.0) > tol::norm) {
      throw StateError("state norm " + format_g12(nrm) + " is not 1");
    }
  }

  /// Single-factor state from raw amplitudes.
  static PureState single(Vector amplitudes) {
    Index d = amplitudes.size();
    return PureState({d}, std::move(amplitudes));
  }

  /// Computational basis vector |index> in one factor of dimension `dim`.
  static PureState basis(Index dim, Index index) {
    if (dim < 1 || index < 0 || index >= dim) {
      throw ArgError("basis index " + std::to_string(index) +
                     " out of range for dimension " + std::to_string(dim));
    }
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return PureState({dim}, std::move(v));
  }

  const std::vector<Index>& dims() const { return dims_; }
  Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }
  Complex amplitude(Index i) const { return amps_(i); }

 private:
  std::vector<Index> dims_;
  Vector amps_;
};

/// Validated density matrix: Hermitian, positive semidefinite, unit trace.
/// Eigenvalues in [-1e-9, 0) are treated as zero; anything more negative is
/// rejected rather than repaired.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
      throw StateError("density matrix must be square and non-empty");
    }
    if (!all_finite(m_)) throw StateError("density matrix entries must be finite");
    if (hermiticity_error(m_) > tol::herm) {
      throw StateError("density matrix is not Hermitian (deviation " +
                       format_g12(hermiticity_error(m_)) + ")");
    }
    double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > tol::norm) {
      throw StateError("density matrix trace " + format_g12(tr) + " is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m_ + m_.adjoint()),
                                                 Eigen::EigenvaluesOnly);
    double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol::psd) {
      throw StateError("density matrix has negative eigenvalue " + format_g12(min_eig));
    }
  }

  bool empty() const { return m_.size() == 0; }
  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Projector |psi><psi| of a pure state, as a validated density matrix.
inline DensityMatrix projector(const PureState& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

/// Finite probability distribution with optional outcome labels.
class ProbDist {
 public:
  ProbDist() = default;

  explicit ProbDist(std::vector<double> probabilities,
                    std::vector<std::string> labels = {})
      : p_(std::move(probabilities)), labels_(std::move(labels)) {
    if (p_.empty()) throw StateError("distribution needs at least one outcome");
    if (!labels_.empty() && labels_.size() != p_.size()) {
      throw StateError("label count does not match outcome count");
    }
    double sum = 0.0;
    for (double x : p_) {
      if (!std::isfinite(x)) throw StateError("probabilities must be finite");
      if (x < -tol::psd) {
        throw StateError("negative probability " + format_g12(x));
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > tol::norm) {
      throw StateError("probabilities sum to " + format_g12(sum) + ", not 1");
    }
    for (double& x : p_) {
      if (x < 0.0) x = 0.0;
    }
  }

  static ProbDist uniform(std::size_t n) {
    if (n == 0) throw ArgError("uniform distribution needs at least one outcome");
    return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  bool empty() const { return p_.empty(); }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probabilities() const { return p_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const {
    return labels_.empty() ? std::to_string(i) : labels_[i];
  }

 private:
  std::vector<double> p_;
  std::vector<std::string> labels_;
};

/// Kronecker product of two operators, with the left factor owning the most
/// significant index block (row-major composite ordering).
inline Matrix tensor(const Matrix& a, const Matrix& b) {
  std::size_t rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
  std::size_t cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
  if (rows > max_dimension() || cols > max_dimension()) {
    throw DimensionError("tensor product dimension " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceeds cap " +
                         std::to_string(max_dimension()));
  }
  Matrix out(static_cast<Index>(rows), static_cast<Index>(cols));
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Tensor product of two pure states; factor lists are concatenated.
inline PureState tensor(const PureState& a, const PureState& b) {
  std::size_t total = static_cast<std::size_t>(a.dim()) * static_cast<std::size_t>(b.dim());
  if (total > max_dimension()) {
    throw DimensionError("tensor product dimension " + std::to_string(total) +
                         " exceeds cap " + std::to_string(max_dimension()));
  }
  std::vector<Index> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  Vector out(static_cast<Index>(total));
  for (Index i = 0; i < a.dim(); ++i) {
    out.segment(i * b.dim(), b.dim()) = a.amplitude(i) * b.amplitudes();
  }
  return PureState(std::move(dims), std::move(out));
}

/// Traces out every tensor factor except `keep`, under the row-major
/// composite indexing used by PureState and tensor().
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<Index>& dims,
                                   std::size_t keep) {
  if (dims.empty()) throw DimensionError("factor list is empty");
  if (keep >= dims.size()) {
    throw DimensionError("keep index " + std::to_string(keep) + " out of range for " +
                         std::to_string(dims.size()) + " factors");
  }
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw DimensionError("tensor factor dimensions must be positive");
    total *= d;
  }
  if (total != rho.dim()) {
    throw DimensionError("factor product " + std::to_string(total) +
                         " does not match operator dimension " + std::to_string(rho.dim()));
  }

  // Row-major mixed-radix decomposition of a composite index.
  auto coords = [&](Index x) {
    std::vector<Index> c(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
      c[i] = x % dims[i];
      x /= dims[i];
    }
    return c;
  };

  Index dk = dims[keep];
  Matrix out = Matrix::Zero(dk, dk);
  for (Index r = 0; r < total; ++r) {
    std::vector<Index> cr = coords(r);
    for (Index c = 0; c < total; ++c) {
      std::vector<Index> cc = coords(c);
      bool diagonal_elsewhere = true;
      for (std::size_t f = 0; f < dims.size(); ++f) {
        if (f != keep && cr[f] != cc[f]) {
          diagonal_elsewhere = false;
          break;
        }
      }
      if (diagonal_elsewhere) out(cr[keep], cc[keep]) += rho.matrix()(r, c);
    }
  }
  return DensityMatrix(std::move(out));
}

/// Reduced state of one factor of a pure state.
inline DensityMatrix reduced_density(const PureState& psi, std::size_t keep) {
  return partial_trace(projector(psi), psi.dims(), keep);
}

/// Eigenvalues (descending) and matching orthonormal eigenvector columns of
/// a Hermitian matrix.
struct EigSystem {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

inline EigSystem eig_hermitian(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ShapeError("eigendecomposition needs a square, non-empty matrix");
  }
  if (!all_finite(m)) throw ShapeError("matrix entries must be finite");
  if (hermiticity_error(m) > tol::herm) {
    throw ShapeError("matrix is not Hermitian (deviation " +
                     format_g12(hermiticity_error(m)) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw ShapeError("eigendecomposition failed to converge");
  }
  // Eigen returns ascending order; flip to descending.
  EigSystem out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// Shannon entropy in bits.
inline double shannon_entropy(const ProbDist& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) h -= p[i] * std::log2(p[i]);
  }
  return h;
}

/// Von Neumann entropy in bits.  Eigenvalues within [-1e-9, 0) count as
/// exact zeros.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      0.5 * (rho.matrix() + rho.matrix().adjoint()), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace dualgame

#endif  // DUALGAME_QCORE_HPP
