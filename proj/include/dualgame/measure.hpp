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

#ifndef DUALGAME_MEASURE_HPP
#define DUALGAME_MEASURE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualgame/common.hpp"
#include "dualgame/qcore.hpp"
#include "dualgame/rng.hpp"
#include "dualgame/states.hpp"

namespace dualgame {

/// Label attached to one measurement outcome: a sorted set of the indices
/// the outcome refers to (one index for an ordinary click, two for a pair
/// finding, more for larger subsets).
class OutcomeLabel {
 public:
  explicit OutcomeLabel(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw ArgError("outcome label needs at least one index");
    for (int i : indices_) {
      if (i < 0) throw ArgError("outcome label indices must be non-negative");
    }
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
      throw ArgError("outcome label indices must be distinct");
    }
  }

  static OutcomeLabel single(int i) { return OutcomeLabel({i}); }
  static OutcomeLabel pair(int i, int j) { return OutcomeLabel({i, j}); }

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
  }

  std::string str() const {
    if (indices_.size() == 1) return std::to_string(indices_[0]);
    std::string s = "{";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(indices_[i]);
    }
    s += "}";
    return s;
  }

  friend bool operator==(const OutcomeLabel& a, const OutcomeLabel& b) {
    return a.indices_ == b.indices_;
  }

 private:
  std::vector<int> indices_;
};

struct PovmElement {
  OutcomeLabel label;
  Matrix op;
};

/// Positive operator-valued measure: labeled Hermitian PSD elements that sum
/// to the identity.  Validation happens at construction so downstream code
/// can rely on Born-rule outputs being genuine distributions.
class Povm {
 public:
  Povm() = default;

  Povm(Index dim, std::vector<PovmElement> elements)
      : dim_(dim), elements_(std::move(elements)) {
    if (dim_ < 1) throw ArgError("measurement dimension must be positive");
    if (elements_.empty()) throw ArgError("measurement needs at least one element");
    Matrix sum = Matrix::Zero(dim_, dim_);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const Matrix& e = elements_[i].op;
      std::string where = "element " + std::to_string(i) + " (" +
                          elements_[i].label.str() + ")";
      if (e.rows() != dim_ || e.cols() != dim_) {
        throw ArgError(where + " has wrong shape");
      }
      if (!all_finite(e)) throw ArgError(where + " has non-finite entries");
      if (hermiticity_error(e) > tol::herm) {
        throw ArgError(where + " is not Hermitian");
      }
      Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (e + e.adjoint()),
                                                   Eigen::EigenvaluesOnly);
      double min_eig = solver.eigenvalues().minCoeff();
      if (min_eig < -tol::psd) {
        throw ArgError(where + " has negative eigenvalue " + format_g12(min_eig));
      }
      sum += e;
    }
    double completeness = (sum - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
    if (completeness > tol::norm) {
      throw ArgError("elements sum to identity only within " + format_g12(completeness));
    }
  }

  bool empty() const { return elements_.empty(); }
  Index dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const PovmElement& element(std::size_t i) const { return elements_[i]; }
  const PovmElement& operator[](std::size_t i) const { return elements_[i]; }

  std::vector<std::string> label_strings() const {
    std::vector<std::string> out;
    out.reserve(elements_.size());
    for (const PovmElement& e : elements_) out.push_back(e.label.str());
    return out;
  }

 private:
  Index dim_ = 0;
  std::vector<PovmElement> elements_;
};

/// Probability of each outcome of `povm` on the state `rho` (Born rule).
/// Tiny negative traces from rounding are clamped to zero.
inline ProbDist born_distribution(const DensityMatrix& rho, const Povm& povm) {
  if (rho.dim() != povm.dim()) {
    throw DimensionError("state dimension " + std::to_string(rho.dim()) +
                         " does not match measurement dimension " +
                         std::to_string(povm.dim()));
  }
  std::vector<double> p(povm.size());
  for (std::size_t i = 0; i < povm.size(); ++i) {
    double x = (rho.matrix() * povm[i].op).trace().real();
    p[i] = x < 0.0 ? 0.0 : x;
  }
  return ProbDist(std::move(p), povm.label_strings());
}

inline ProbDist born_distribution(const PureState& psi, const Povm& povm) {
  if (psi.dim() != povm.dim()) {
    throw DimensionError("state dimension " + std::to_string(psi.dim()) +
                         " does not match measurement dimension " +
                         std::to_string(povm.dim()));
  }
  std::vector<double> p(povm.size());
  for (std::size_t i = 0; i < povm.size(); ++i) {
    double x = (psi.amplitudes().adjoint() * povm[i].op * psi.amplitudes())(0).real();
    p[i] = x < 0.0 ? 0.0 : x;
  }
  return ProbDist(std::move(p), povm.label_strings());
}

/// Index drawn from `dist` by inverting the cumulative distribution in
/// outcome order, using one uniform draw from `stream`.
inline std::size_t sample_index(const ProbDist& dist, SeedStream& stream) {
  double u = stream.next_unit();
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < dist.size(); ++i) {
    cum += dist[i];
    if (u < cum) return i;
  }
  return dist.size() - 1;
}

inline const OutcomeLabel& sample_outcome(const DensityMatrix& rho, const Povm& povm,
                                          SeedStream& stream) {
  return povm[sample_index(born_distribution(rho, povm), stream)].label;
}

inline const OutcomeLabel& sample_outcome(const PureState& psi, const Povm& povm,
                                          SeedStream& stream) {
  return povm[sample_index(born_distribution(psi, povm), stream)].label;
}

/// The measurement whose outcome j certifies "not trine state j":
/// elements (2/3)|bar_eta_j><bar_eta_j| built from the anti-trine states.
inline Povm anti_trine_povm() {
  DetectorFamily anti = anti_trine_states();
  std::vector<PovmElement> elems;
  for (int j = 0; j < 3; ++j) {
    const Vector& v = anti.state(static_cast<std::size_t>(j)).amplitudes();
    elems.push_back({OutcomeLabel::single(j), (2.0 / 3.0) * (v * v.adjoint())});
  }
  return Povm(2, std::move(elems));
}

/// Six-outcome measurement on the tetrahedral detector space whose outcome
/// {j,k} certifies that the detector state is one of the pair {j,k} (it has
/// zero probability on the complementary pair).  Element {j,k} is
/// (1/2)|xi_{lm}><xi_{lm}| where {l,m} is the complement of {j,k} and
/// xi_{lm} is the unit vector orthogonal to detector states l and m.
inline Povm six_pair_povm() {
  DetectorFamily dets = simplex4_detectors();
  const std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<PovmElement> elems;
  for (const auto& [j, k] : pairs) {
    // Complement pair {l, m}: the two indices not in {j, k}.
    int l = -1, m = -1;
    for (int x = 0; x < 4; ++x) {
      if (x == j || x == k) continue;
      (l < 0 ? l : m) = x;
    }
    // Unit vector orthogonal to detector states l and m: cross product of
    // the (real) detector vectors, normalized.
    const Vector& a = dets.state(static_cast<std::size_t>(l)).amplitudes();
    const Vector& b = dets.state(static_cast<std::size_t>(m)).amplitudes();
    Eigen::Vector3d ar(a(0).real(), a(1).real(), a(2).real());
    Eigen::Vector3d br(b(0).real(), b(1).real(), b(2).real());
    Eigen::Vector3d x = ar.cross(br).normalized();
    Vector xi(3);
    xi << Complex(x(0), 0), Complex(x(1), 0), Complex(x(2), 0);
    elems.push_back({OutcomeLabel::pair(j, k), 0.5 * (xi * xi.adjoint())});
  }
  return Povm(3, std::move(elems));
}

/// Rank-one projective measurement onto an orthonormal basis.  Labels
/// default to the basis indices.
inline Povm projective_povm(const std::vector<PureState>& basis,
                            std::vector<OutcomeLabel> labels = {}) {
  if (basis.empty()) throw ArgError("projective measurement needs a basis");
  Index dim = basis[0].dim();
  if (static_cast<Index>(basis.size()) != dim) {
    throw ArgError("basis has " + std::to_string(basis.size()) +
                   " vectors for dimension " + std::to_string(dim));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].dim() != dim) throw ArgError("basis vectors have mixed dimensions");
    for (std::size_t j = 0; j < i; ++j) {
      Complex ip = (basis[j].amplitudes().adjoint() * basis[i].amplitudes())(0);
      if (std::abs(ip) > tol::eig) {
        throw ArgError("basis vectors " + std::to_string(j) + " and " +
                       std::to_string(i) + " are not orthogonal");
      }
    }
  }
  if (!labels.empty() && labels.size() != basis.size()) {
    throw ArgError("label count does not match basis size");
  }
  std::vector<PovmElement> elems;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    OutcomeLabel label =
        labels.empty() ? OutcomeLabel::single(static_cast<int>(i)) : labels[i];
    const Vector& v = basis[i].amplitudes();
    elems.push_back({std::move(label), v * v.adjoint()});
  }
  return Povm(dim, std::move(elems));
}

/// One hypothesis handed to verify_exclusion: a state together with the
/// index set it represents.
struct Hypothesis {
  std::vector<int> indices;
  DensityMatrix state;
};

struct ExclusionEntry {
  std::size_t outcome;
  std::size_t hypothesis;
  double probability;
  bool excluded;   // probability <= 1e-8
  bool near_miss;  // small but not zero: probability in (1e-8, 1e-6]
};

struct ExclusionReport {
  std::vector<ExclusionEntry> entries;
  // Outcome -> hypotheses it excludes.
  std::vector<std::vector<std::size_t>> excluded_by_outcome;
  bool every_outcome_excludes = false;
  bool intended_covered = true;
  bool passed = false;

  std::string str() const {
    std::string s;
    for (std::size_t o = 0; o < excluded_by_outcome.size(); ++o) {
      s += "outcome " + std::to_string(o) + " excludes {";
      for (std::size_t i = 0; i < excluded_by_outcome[o].size(); ++i) {
        if (i) s += ",";
        s += std::to_string(excluded_by_outcome[o][i]);
      }
      s += "}\n";
    }
    for (const ExclusionEntry& e : entries) {
      if (e.near_miss) {
        s += "near miss: outcome " + std::to_string(e.outcome) + " on hypothesis " +
             std::to_string(e.hypothesis) + " has probability " +
             format_g12(e.probability) + "\n";
      }
    }
    return s;
  }
};

/// Checks that a measurement implements exclusion: every outcome must have
/// (numerically) zero probability on at least one hypothesis state.  When
/// `intended` is given, outcome o must exclude every hypothesis listed in
/// intended[o].  Probabilities that just miss the exclusion threshold are
/// flagged as near misses so borderline constructions are visible.
inline ExclusionReport verify_exclusion(
    const Povm& povm, const std::vector<Hypothesis>& hypotheses,
    const std::optional<std::vector<std::vector<std::size_t>>>& intended =
        std::nullopt) {
  if (hypotheses.empty()) throw ArgError("exclusion check needs hypotheses");
  if (intended && intended->size() != povm.size()) {
    throw ArgError("intended exclusion list must have one entry per outcome");
  }
  ExclusionReport report;
  report.excluded_by_outcome.resize(povm.size());
  for (std::size_t h = 0; h < hypotheses.size(); ++h) {
    ProbDist dist = born_distribution(hypotheses[h].state, povm);
    for (std::size_t o = 0; o < povm.size(); ++o) {
      ExclusionEntry entry;
      entry.outcome = o;
      entry.hypothesis = h;
      entry.probability = dist[o];
      entry.excluded = dist[o] <= tol::eig;
      entry.near_miss = !entry.excluded && dist[o] <= 1e-6;
      if (entry.excluded) report.excluded_by_outcome[o].push_back(h);
      report.entries.push_back(entry);
    }
  }
  report.every_outcome_excludes = true;
  for (const auto& ex : report.excluded_by_outcome) {
    if (ex.empty()) report.every_outcome_excludes = false;
  }
  if (intended) {
    for (std::size_t o = 0; o < povm.size(); ++o) {
      for (std::size_t h : (*intended)[o]) {
        if (h >= hypotheses.size()) {
          throw ArgError("intended hypothesis index out of range");
        }
        const auto& ex = report.excluded_by_outcome[o];
        if (std::find(ex.begin(), ex.end(), h) == ex.end()) {
          report.intended_covered = false;
        }
      }
    }
  }
  report.passed = report.every_outcome_excludes && report.intended_covered;
  return report;
}

}  // namespace dualgame

#endif  // DUALGAME_MEASURE_HPP
