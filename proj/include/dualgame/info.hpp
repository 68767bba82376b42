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

#ifndef DUALGAME_INFO_HPP
#define DUALGAME_INFO_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dualgame/common.hpp"
#include "dualgame/game.hpp"
#include "dualgame/measure.hpp"
#include "dualgame/qcore.hpp"
#include "dualgame/rng.hpp"
#include "dualgame/states.hpp"

namespace dualgame {

/// Joint distribution of two finite variables, stored as a table with
/// p(x, y) at (row x, column y).
class JointDistribution {
 public:
  explicit JointDistribution(RealMatrix table, std::vector<std::string> x_labels = {},
                             std::vector<std::string> y_labels = {})
      : table_(std::move(table)),
        x_labels_(std::move(x_labels)),
        y_labels_(std::move(y_labels)) {
    if (table_.rows() < 1 || table_.cols() < 1) {
      throw DistError("joint table must be non-empty");
    }
    if (!x_labels_.empty() && static_cast<Index>(x_labels_.size()) != table_.rows()) {
      throw DistError("row label count does not match table");
    }
    if (!y_labels_.empty() && static_cast<Index>(y_labels_.size()) != table_.cols()) {
      throw DistError("column label count does not match table");
    }
    double sum = 0.0;
    for (Index x = 0; x < table_.rows(); ++x) {
      for (Index y = 0; y < table_.cols(); ++y) {
        double p = table_(x, y);
        if (!std::isfinite(p)) throw DistError("joint table entries must be finite");
        if (p < -tol::psd) {
          throw DistError("negative joint probability " + format_g12(p));
        }
        if (p < 0.0) table_(x, y) = 0.0;
        sum += table_(x, y);
      }
    }
    if (std::abs(sum - 1.0) > tol::norm) {
      throw DistError("joint table sums to " + format_g12(sum) + ", not 1");
    }
  }

  const RealMatrix& table() const { return table_; }
  RealVector marginal_x() const { return table_.rowwise().sum(); }
  RealVector marginal_y() const { return table_.colwise().sum(); }
  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }

  JointDistribution transposed() const {
    return JointDistribution(table_.transpose(), y_labels_, x_labels_);
  }

 private:
  RealMatrix table_;
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
};

/// Mutual information I(X:Y) in bits.  Zero cells contribute nothing.
inline double mutual_information(const JointDistribution& joint) {
  RealVector px = joint.marginal_x();
  RealVector py = joint.marginal_y();
  double info = 0.0;
  for (Index x = 0; x < joint.table().rows(); ++x) {
    for (Index y = 0; y < joint.table().cols(); ++y) {
      double p = joint.table()(x, y);
      if (p > 0.0) info += p * std::log2(p / (px(x) * py(y)));
    }
  }
  // Rounding can leave a tiny negative residue on product distributions.
  return info < 0.0 ? 0.0 : info;
}

/// Ensemble of states with prior probabilities.
struct Ensemble {
  ProbDist priors;
  std::vector<DensityMatrix> states;
};

/// Holevo quantity chi = S(sum_i p_i rho_i) - sum_i p_i S(rho_i): the
/// ceiling on the mutual information any measurement can extract about the
/// ensemble index.
inline double holevo_quantity(const Ensemble& ensemble) {
  if (ensemble.priors.empty() || ensemble.states.empty()) {
    throw DimensionError("ensemble must be non-empty");
  }
  if (ensemble.priors.size() != ensemble.states.size()) {
    throw DimensionError("ensemble has " + std::to_string(ensemble.priors.size()) +
                         " priors for " + std::to_string(ensemble.states.size()) +
                         " states");
  }
  Index dim = ensemble.states[0].dim();
  Matrix avg = Matrix::Zero(dim, dim);
  double mean_entropy = 0.0;
  for (std::size_t i = 0; i < ensemble.states.size(); ++i) {
    if (ensemble.states[i].dim() != dim) {
      throw DimensionError("ensemble states have mixed dimensions");
    }
    avg += ensemble.priors[i] * ensemble.states[i].matrix();
    mean_entropy += ensemble.priors[i] * von_neumann_entropy(ensemble.states[i]);
  }
  return von_neumann_entropy(DensityMatrix(std::move(avg))) - mean_entropy;
}

/// Relative entropy of coherence in the reference basis: H(diagonal) - S(rho).
/// `weights` must match the diagonal of `rho`; passing them explicitly keeps
/// callers honest about which distribution the comparison is against.
inline double coherence_rel_entropy(const DensityMatrix& rho, const ProbDist& weights) {
  if (static_cast<Index>(weights.size()) != rho.dim()) {
    throw ArgError("weight count does not match state dimension");
  }
  for (Index j = 0; j < rho.dim(); ++j) {
    double diag = rho.matrix()(j, j).real();
    if (std::abs(diag - weights[static_cast<std::size_t>(j)]) > tol::eig) {
      throw ArgError("diagonal entry " + std::to_string(j) + " is " + format_g12(diag) +
                     ", expected " + format_g12(weights[static_cast<std::size_t>(j)]));
    }
  }
  return shannon_entropy(weights) - von_neumann_entropy(rho);
}

/// Verdict on the information-theoretic trade-off
///   I(phase joint) + I(path joint) <= H(weights).
struct DualityReport {
  double phase_mi = 0.0;       // I1: what the phase measurement learned
  double path_mi = 0.0;        // I2: what the which-path measurement learned
  double weight_entropy = 0.0; // H of the path weights
  double slack = 0.0;          // H - I1 - I2
  bool passes = false;         // slack >= -1e-8
  bool saturated = false;      // |slack| <= 1e-8
};

inline DualityReport duality_check(const JointDistribution& phase_joint,
                                   const JointDistribution& path_joint,
                                   const ProbDist& weights) {
  DualityReport report;
  report.phase_mi = mutual_information(phase_joint);
  report.path_mi = mutual_information(path_joint);
  report.weight_entropy = shannon_entropy(weights);
  report.slack = report.weight_entropy - report.phase_mi - report.path_mi;
  report.passes = report.slack >= -tol::eig;
  report.saturated = std::abs(report.slack) <= tol::eig;
  return report;
}

/// The two joints a scenario induces: (phase k, Alice outcome) with k
/// uniform, and (path j, Bob outcome) with j weighted.
struct ScenarioJoints {
  JointDistribution phase_joint;
  JointDistribution path_joint;
};

inline ScenarioJoints scenario_joints(const GameScenario& scenario) {
  RoundTables tables = compile_round_tables(scenario);
  Index n_phase = scenario.phase_count;
  RealMatrix phase_table(n_phase, static_cast<Index>(scenario.alice_phase_povm.size()));
  std::vector<std::string> phase_rows;
  for (Index k = 0; k < n_phase; ++k) {
    const ProbDist& dist = tables.phase_dists[static_cast<std::size_t>(k)];
    for (std::size_t o = 0; o < dist.size(); ++o) {
      phase_table(k, static_cast<Index>(o)) = dist[o] / static_cast<double>(n_phase);
    }
    phase_rows.push_back(std::to_string(k));
  }
  RealMatrix path_table(scenario.n_paths, static_cast<Index>(scenario.bob_povm.size()));
  std::vector<std::string> path_rows;
  for (Index j = 0; j < scenario.n_paths; ++j) {
    const ProbDist& dist = tables.path_dists[static_cast<std::size_t>(j)];
    for (std::size_t o = 0; o < dist.size(); ++o) {
      path_table(j, static_cast<Index>(o)) =
          dist[o] * scenario.weights[static_cast<std::size_t>(j)];
    }
    path_rows.push_back(std::to_string(j));
  }
  return {JointDistribution(std::move(phase_table), std::move(phase_rows),
                            scenario.alice_phase_povm.label_strings()),
          JointDistribution(std::move(path_table), std::move(path_rows),
                            scenario.bob_povm.label_strings())};
}

/// Partition of {0, ..., N-1} into equal-size disjoint sets.
class Partition {
 public:
  Partition(Index n_elements, std::vector<std::vector<int>> sets)
      : n_(n_elements), sets_(std::move(sets)) {
    if (n_ < 1) throw ArgError("partition needs a positive ground set");
    if (sets_.empty()) throw ArgError("partition needs at least one set");
    std::size_t size = sets_[0].size();
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::size_t covered = 0;
    for (const std::vector<int>& s : sets_) {
      if (s.size() != size || s.empty()) {
        throw ArgError("partition sets must be non-empty and equal-sized");
      }
      for (int x : s) {
        if (x < 0 || x >= n_) throw ArgError("partition element out of range");
        if (seen[static_cast<std::size_t>(x)]) {
          throw ArgError("partition sets overlap at " + std::to_string(x));
        }
        seen[static_cast<std::size_t>(x)] = true;
        covered += 1;
      }
    }
    if (covered != static_cast<std::size_t>(n_)) {
      throw ArgError("partition does not cover the ground set");
    }
  }

  /// n consecutive blocks of size N/n.
  static Partition contiguous(Index n_elements, Index n_sets) {
    if (n_sets < 1 || n_elements < 1 || n_elements % n_sets != 0) {
      throw ArgError("set count must divide the ground set size");
    }
    Index block = n_elements / n_sets;
    std::vector<std::vector<int>> sets;
    for (Index s = 0; s < n_sets; ++s) {
      std::vector<int> members;
      for (Index i = 0; i < block; ++i) {
        members.push_back(static_cast<int>(s * block + i));
      }
      sets.push_back(std::move(members));
    }
    return Partition(n_elements, std::move(sets));
  }

  Index n_elements() const { return n_; }
  Index set_count() const { return static_cast<Index>(sets_.size()); }
  Index set_size() const { return static_cast<Index>(sets_[0].size()); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

 private:
  Index n_;
  std::vector<std::vector<int>> sets_;
};

/// Information needed to pin a uniformly random element of the ground set
/// down to one set of the partition: log2(number of sets).
inline double partition_mi(const Partition& partition) {
  return std::log2(static_cast<double>(partition.set_count()));
}

/// Verdict on whether both sides of the game can simultaneously resolve
/// partitions into n_ways and n_phases sets.
struct PartitionVerdict {
  bool feasible = false;
  bool with_equality = false;
  double info_demand_bits = 0.0;  // log2(n_ways) + log2(n_phases)
  double budget_bits = 0.0;       // log2(N)
};

/// Checks log2(n_ways) + log2(n_phases) <= log2(N).  Both set counts must
/// divide N.  In the symmetric case n_ways = n_phases = n this reduces to
/// n <= sqrt(N).
inline PartitionVerdict partition_feasible(Index n_elements, Index n_ways,
                                           Index n_phases) {
  if (n_elements < 1) throw ArgError("ground set size must be positive");
  if (n_ways < 1 || n_elements % n_ways != 0) {
    throw ArgError("ways set count must divide " + std::to_string(n_elements));
  }
  if (n_phases < 1 || n_elements % n_phases != 0) {
    throw ArgError("phases set count must divide " + std::to_string(n_elements));
  }
  PartitionVerdict verdict;
  verdict.info_demand_bits = std::log2(static_cast<double>(n_ways)) +
                             std::log2(static_cast<double>(n_phases));
  verdict.budget_bits = std::log2(static_cast<double>(n_elements));
  verdict.feasible = verdict.info_demand_bits <= verdict.budget_bits + tol::eig;
  verdict.with_equality =
      std::abs(verdict.info_demand_bits - verdict.budget_bits) <= tol::eig;
  return verdict;
}

/// Knobs for random scenario generation.
struct RandomScenarioOptions {
  Index n_paths_min = 2;
  Index n_paths_max = 4;
  Index detector_dim_min = 2;
  Index detector_dim_max = 4;
  std::size_t max_povm_elements = 6;
};

namespace detail {

/// Haar-like random unit vector: complex standard normals, normalized.
inline Vector random_unit_vector(SeedStream& stream, Index dim) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) {
    v(i) = Complex(stream.next_normal(), stream.next_normal());
  }
  return v / v.norm();
}

/// Random POVM with `n_elems` elements on dimension `dim`: raw positive
/// operators G_i^dagger G_i, sandwiched by S^{-1/2} (S their sum) so they
/// sum to the identity exactly.
inline Povm random_povm(SeedStream& stream, Index dim, std::size_t n_elems) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Matrix> raw;
    Matrix sum = Matrix::Zero(dim, dim);
    for (std::size_t i = 0; i < n_elems; ++i) {
      Matrix g(dim, dim);
      for (Index r = 0; r < dim; ++r) {
        for (Index c = 0; c < dim; ++c) {
          g(r, c) = Complex(stream.next_normal(), stream.next_normal());
        }
      }
      Matrix e = g.adjoint() * g;
      raw.push_back(e);
      sum += e;
    }
    EigSystem eig = eig_hermitian(sum);
    if (eig.eigenvalues.minCoeff() <= 1e-10) continue;  // redraw, keeps stream advancing
    Matrix inv_sqrt = eig.eigenvectors *
                      eig.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
                      eig.eigenvectors.adjoint();
    std::vector<PovmElement> elems;
    for (std::size_t i = 0; i < n_elems; ++i) {
      elems.push_back({OutcomeLabel::single(static_cast<int>(i)),
                       inv_sqrt * raw[i] * inv_sqrt});
    }
    return Povm(dim, std::move(elems));
  }
  throw StateError("random measurement generation kept producing singular sums");
}

}  // namespace detail

/// Draws a random but valid scenario: generic weights, generic detector
/// states, and random (not exclusion-structured) measurements for both
/// players.  Answer maps are placeholder singletons; the scenario is meant
/// for information-theoretic checks, not for winning.
inline GameScenario random_scenario(SeedStream& stream,
                                    const RandomScenarioOptions& options = {}) {
  if (options.n_paths_min < 1 || options.n_paths_max < options.n_paths_min) {
    throw ArgError("invalid path count range");
  }
  if (options.detector_dim_min < 1 ||
      options.detector_dim_max < options.detector_dim_min) {
    throw ArgError("invalid detector dimension range");
  }
  auto draw_in = [&stream](Index lo, Index hi) {
    Index span = hi - lo + 1;
    return lo + std::min<Index>(span - 1, static_cast<Index>(stream.next_unit() *
                                                             static_cast<double>(span)));
  };
  GameScenario s;
  s.name = "random";
  s.n_paths = draw_in(options.n_paths_min, options.n_paths_max);
  s.phase_count = s.n_paths;
  std::vector<double> w(static_cast<std::size_t>(s.n_paths));
  double total = 0.0;
  for (double& x : w) {
    // Exponential draws normalize to a Dirichlet(1,...,1) sample.
    x = -std::log(1.0 - stream.next_unit());
    total += x;
  }
  for (double& x : w) x /= total;
  s.weights = ProbDist(std::move(w));
  Index det_dim = draw_in(options.detector_dim_min, options.detector_dim_max);
  std::vector<PureState> dets;
  for (Index j = 0; j < s.n_paths; ++j) {
    dets.push_back(PureState::single(detail::random_unit_vector(stream, det_dim)));
  }
  s.detectors = DetectorFamily(det_dim, std::move(dets));
  auto draw_elems = [&] {
    std::size_t lo = 2;
    std::size_t hi = std::max<std::size_t>(lo, options.max_povm_elements);
    std::size_t span = hi - lo + 1;
    return lo + std::min<std::size_t>(
                    span - 1, static_cast<std::size_t>(stream.next_unit() *
                                                       static_cast<double>(span)));
  };
  s.alice_phase_povm = detail::random_povm(stream, s.n_paths, draw_elems());
  s.bob_povm = detail::random_povm(stream, det_dim, draw_elems());
  s.ways_answer_size = 1;
  s.phases_answer_size = 1;
  s.ways_answers.assign(s.bob_povm.size(), {0});
  s.phases_answers.assign(s.alice_phase_povm.size(), {0});
  s.validate();
  return s;
}

/// One fuzz case's key numbers.
struct FuzzCase {
  std::uint64_t index = 0;
  double slack = 0.0;
  double phase_holevo_excess = 0.0;  // I1 - chi(phase ensemble)
  double path_holevo_excess = 0.0;   // I2 - chi(detector ensemble)
};

struct FuzzResult {
  std::uint64_t count = 0;
  std::uint64_t duality_violations = 0;
  std::uint64_t holevo_violations = 0;
  FuzzCase worst_slack;          // smallest slack seen
  FuzzCase worst_holevo;         // largest Holevo excess seen
  std::vector<std::uint64_t> violation_indices;
};

/// Randomized sweep: draws `count` scenarios and checks on each that
///   * slack = H(weights) - I1 - I2 is >= -1e-9, and
///   * each side's mutual information is within 1e-9 of its Holevo ceiling.
/// Case i uses substream(i) of a root stream keyed on `seed`, so any
/// violation can be replayed in isolation from (seed, index).
inline FuzzResult run_duality_fuzz(std::uint64_t count, std::uint64_t seed,
                                   const RandomScenarioOptions& options = {}) {
  if (count == 0) throw ArgError("fuzz count must be positive");
  FuzzResult result;
  result.count = count;
  result.worst_slack.slack = std::numeric_limits<double>::infinity();
  SeedStream root(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    SeedStream stream = root.substream(i);
    GameScenario scenario = random_scenario(stream, options);
    ScenarioJoints joints = scenario_joints(scenario);
    DualityReport report =
        duality_check(joints.phase_joint, joints.path_joint, scenario.weights);

    PureState joint_state = scenario.initial_state();
    PhaseGroup group(scenario.phase_count);
    Ensemble phase_ensemble;
    phase_ensemble.priors = ProbDist::uniform(static_cast<std::size_t>(scenario.phase_count));
    for (Index k = 0; k < scenario.phase_count; ++k) {
      phase_ensemble.states.push_back(reduced_path_state(joint_state, k, group));
    }
    Ensemble detector_ensemble;
    detector_ensemble.priors = scenario.weights;
    for (Index j = 0; j < scenario.n_paths; ++j) {
      detector_ensemble.states.push_back(
          projector(scenario.detectors.state(static_cast<std::size_t>(j))));
    }

    FuzzCase fuzz_case;
    fuzz_case.index = i;
    fuzz_case.slack = report.slack;
    fuzz_case.phase_holevo_excess =
        report.phase_mi - holevo_quantity(phase_ensemble);
    fuzz_case.path_holevo_excess =
        report.path_mi - holevo_quantity(detector_ensemble);

    bool duality_bad = fuzz_case.slack < -tol::norm;
    bool holevo_bad = fuzz_case.phase_holevo_excess > tol::norm ||
                      fuzz_case.path_holevo_excess > tol::norm;
    if (duality_bad) result.duality_violations += 1;
    if (holevo_bad) result.holevo_violations += 1;
    if (duality_bad || holevo_bad) result.violation_indices.push_back(i);
    if (fuzz_case.slack < result.worst_slack.slack) result.worst_slack = fuzz_case;
    double excess = std::max(fuzz_case.phase_holevo_excess, fuzz_case.path_holevo_excess);
    if (i == 0 || excess > std::max(result.worst_holevo.phase_holevo_excess,
                                    result.worst_holevo.path_holevo_excess)) {
      result.worst_holevo = fuzz_case;
    }
  }
  return result;
}

}  // namespace dualgame

#endif  // DUALGAME_INFO_HPP
