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

#ifndef DUALGAME_STATES_HPP
#define DUALGAME_STATES_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "dualgame/common.hpp"
#include "dualgame/qcore.hpp"

namespace dualgame {

inline constexpr double kTau = 6.28318530717958647692;  // 2*pi

/// One normalized detector state per path, all living in a common detector
/// space.  The family as a whole need not be orthogonal or even distinct;
/// overlaps between members are what make which-path information partial.
class DetectorFamily {
 public:
  DetectorFamily() = default;

  DetectorFamily(Index detector_dim, std::vector<PureState> states)
      : dim_(detector_dim), states_(std::move(states)) {
    if (dim_ < 1) throw StateError("detector dimension must be positive");
    if (states_.empty()) throw StateError("detector family needs at least one state");
    for (const PureState& s : states_) {
      if (s.dims().size() != 1 || s.dim() != dim_) {
        throw StateError("detector states must be single-factor states of dimension " +
                         std::to_string(dim_));
      }
    }
  }

  bool empty() const { return states_.empty(); }
  Index detector_dim() const { return dim_; }
  std::size_t n_states() const { return states_.size(); }
  const PureState& state(std::size_t j) const { return states_[j]; }
  const std::vector<PureState>& states() const { return states_; }

 private:
  Index dim_ = 0;
  std::vector<PureState> states_;
};

/// Diagonal phase unitary on the path space: |j> picks up exp(2*pi*i*j*k/N).
/// The k = 0..N-1 unitaries form a cyclic group of order N.
inline Matrix phase_unitary(Index n_paths, Index k) {
  if (n_paths < 1) throw ArgError("path count must be positive");
  if (k < 0 || k >= n_paths) {
    throw ArgError("phase index " + std::to_string(k) + " out of range for order " +
                   std::to_string(n_paths));
  }
  Matrix u = Matrix::Zero(n_paths, n_paths);
  for (Index j = 0; j < n_paths; ++j) {
    // Reduce the exponent first so angles stay in [0, 2*pi).
    Index m = (j * k) % n_paths;
    u(j, j) = std::polar(1.0, kTau * static_cast<double>(m) / static_cast<double>(n_paths));
  }
  return u;
}

/// The cyclic group of phase unitaries on an N-dimensional path space.
class PhaseGroup {
 public:
  explicit PhaseGroup(Index order) : order_(order) {
    if (order_ < 1) throw ArgError("group order must be positive");
  }

  Index order() const { return order_; }
  Matrix unitary(Index k) const { return phase_unitary(order_, k); }

 private:
  Index order_;
};

/// Discrete Fourier basis of dimension N.  Entry k of vector j is
/// exp(sign * 2*pi*i*j*k/N) / sqrt(N); `sign` must be +1 or -1.  The basis
/// diagonalizes every phase unitary of the same order, and the unitaries
/// permute it cyclically.
inline std::vector<PureState> fourier_basis(Index n, int sign) {
  if (n < 1) throw ArgError("basis dimension must be positive");
  if (sign != 1 && sign != -1) throw ArgError("sign must be +1 or -1");
  std::vector<PureState> basis;
  basis.reserve(static_cast<std::size_t>(n));
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index j = 0; j < n; ++j) {
    Vector v(n);
    for (Index k = 0; k < n; ++k) {
      Index m = (j * k) % n;
      v(k) = scale * std::polar(1.0, sign * kTau * static_cast<double>(m) /
                                         static_cast<double>(n));
    }
    basis.push_back(PureState::single(std::move(v)));
  }
  return basis;
}

/// Three real qubit states at mutual angle 2*pi/3 (pairwise overlap -1/2).
inline DetectorFamily trine_detectors() {
  const double h = std::sqrt(3.0) / 2.0;
  Vector e0(2), e1(2), e2(2);
  e0 << 1.0, 0.0;
  e1 << -0.5, h;
  e2 << -0.5, -h;
  return DetectorFamily(2, {PureState::single(e0), PureState::single(e1),
                            PureState::single(e2)});
}

/// The qubit states orthogonal to the trine, indexed so that member j is
/// orthogonal to trine member j (and has overlap +-sqrt(3)/2 with the rest).
inline DetectorFamily anti_trine_states() {
  const double h = std::sqrt(3.0) / 2.0;
  Vector e0(2), e1(2), e2(2);
  e0 << 0.0, 1.0;
  e1 << -h, -0.5;
  e2 << h, -0.5;
  return DetectorFamily(2, {PureState::single(e0), PureState::single(e1),
                            PureState::single(e2)});
}

/// Four unit vectors in three dimensions forming a regular tetrahedron
/// (pairwise overlap -1/3): the symmetric detector family for four paths.
inline DetectorFamily simplex4_detectors() {
  const double a = 2.0 * std::sqrt(2.0) / 3.0;
  const double b = std::sqrt(2.0) / 3.0;
  const double c = std::sqrt(2.0 / 3.0);
  Vector e0(3), e1(3), e2(3), e3(3);
  e0 << 0.0, 0.0, 1.0;
  e1 << a, 0.0, -1.0 / 3.0;
  e2 << -b, c, -1.0 / 3.0;
  e3 << -b, -c, -1.0 / 3.0;
  return DetectorFamily(3, {PureState::single(e0), PureState::single(e1),
                            PureState::single(e2), PureState::single(e3)});
}

/// Joint path/detector state sum_j sqrt(p_j) |j>|eta_j>, with the path
/// factor first.  Path j carries weight p_j and marks detector state eta_j.
inline PureState interferometer_state(const ProbDist& weights,
                                      const DetectorFamily& detectors) {
  if (weights.empty() || detectors.empty()) {
    throw DimensionError("weights and detector family must be non-empty");
  }
  if (weights.size() != detectors.n_states()) {
    throw DimensionError("weight count " + std::to_string(weights.size()) +
                         " does not match detector count " +
                         std::to_string(detectors.n_states()));
  }
  Index n = static_cast<Index>(weights.size());
  Index d = detectors.detector_dim();
  std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  if (total > max_dimension()) {
    throw DimensionError("joint dimension " + std::to_string(total) + " exceeds cap " +
                         std::to_string(max_dimension()));
  }
  Vector amps(static_cast<Index>(total));
  for (Index j = 0; j < n; ++j) {
    amps.segment(j * d, d) =
        std::sqrt(weights[static_cast<std::size_t>(j)]) *
        detectors.state(static_cast<std::size_t>(j)).amplitudes();
  }
  return PureState({n, d}, std::move(amps));
}

/// Path-space state an observer holds after phase k was applied and the
/// detector factor is ignored: U_k Tr_detector(|psi><psi|) U_k^dagger.
inline DensityMatrix reduced_path_state(const PureState& psi, Index k,
                                        const PhaseGroup& group) {
  if (psi.dims().size() != 2) {
    throw DimensionError("expected a two-factor path/detector state");
  }
  if (psi.dims()[0] != group.order()) {
    throw DimensionError("path factor dimension " + std::to_string(psi.dims()[0]) +
                         " does not match group order " +
                         std::to_string(group.order()));
  }
  DensityMatrix bare = reduced_density(psi, 0);
  Matrix u = group.unitary(k);
  return DensityMatrix(u * bare.matrix() * u.adjoint());
}

}  // namespace dualgame

#endif  // DUALGAME_STATES_HPP
