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

#ifndef DUALGAME_GAME_HPP
#define DUALGAME_GAME_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dualgame/common.hpp"
#include "dualgame/measure.hpp"
#include "dualgame/qcore.hpp"
#include "dualgame/rng.hpp"
#include "dualgame/states.hpp"

namespace dualgame {

/// The two sub-games the house can call.
enum class Subgame { kWays, kPhases };

inline const char* subgame_name(Subgame g) {
  return g == Subgame::kWays ? "ways" : "phases";
}

/// Complete description of one N-path guessing game.
///
/// A round works like this.  The source emits the joint state
/// sum_j sqrt(p_j)|j>|eta_j>, the house applies a uniformly random phase
/// unitary U_k to the path factor, and then announces either "ways" or
/// "phases" (fair coin):
///   * ways:   Bob measures the detector factor with `bob_povm` and must
///             name a set of `ways_answer_size` paths containing the path
///             a sharp path measurement would reveal.
///   * phases: Alice measures the path factor with `alice_phase_povm` and
///             must name a set of `phases_answer_size` phase indices
///             containing k.
/// The answer maps fix, per measurement outcome, exactly which set each
/// player announces.
struct GameScenario {
  std::string name;
  Index n_paths = 0;
  ProbDist weights;
  DetectorFamily detectors;
  Index phase_count = 0;
  Povm bob_povm;          // acts on the detector factor
  Povm alice_phase_povm;  // acts on the path factor
  int ways_answer_size = 0;
  int phases_answer_size = 0;
  std::vector<std::vector<int>> ways_answers;    // per bob_povm outcome
  std::vector<std::vector<int>> phases_answers;  // per alice_phase_povm outcome

  /// Throws ScenarioError when the pieces do not form a playable game.
  void validate() const {
    if (n_paths < 1) throw ScenarioError("path count must be positive");
    if (phase_count != n_paths) {
      throw ScenarioError("phase count " + std::to_string(phase_count) +
                          " must equal path count " + std::to_string(n_paths));
    }
    if (weights.empty() || static_cast<Index>(weights.size()) != n_paths) {
      throw ScenarioError("weights must list one probability per path");
    }
    if (detectors.empty() ||
        static_cast<Index>(detectors.n_states()) != n_paths) {
      throw ScenarioError("detector family must have one state per path");
    }
    if (bob_povm.empty() || bob_povm.dim() != detectors.detector_dim()) {
      throw ScenarioError("bob_povm must act on the detector space (dimension " +
                          std::to_string(detectors.detector_dim()) + ")");
    }
    if (alice_phase_povm.empty() || alice_phase_povm.dim() != n_paths) {
      throw ScenarioError("alice_phase_povm must act on the path space (dimension " +
                          std::to_string(n_paths) + ")");
    }
    if (ways_answer_size < 1 || ways_answer_size > n_paths) {
      throw ScenarioError("ways answer size must be in [1, path count]");
    }
    if (phases_answer_size < 1 || phases_answer_size > phase_count) {
      throw ScenarioError("phases answer size must be in [1, phase count]");
    }
    if (ways_answers.size() != bob_povm.size()) {
      throw ScenarioError("ways answer map must have one entry per bob_povm outcome");
    }
    if (phases_answers.size() != alice_phase_povm.size()) {
      throw ScenarioError(
          "phases answer map must have one entry per alice_phase_povm outcome");
    }
    auto check_map = [](const std::vector<std::vector<int>>& map, int size,
                        Index range, const char* what) {
      for (std::size_t o = 0; o < map.size(); ++o) {
        const std::vector<int>& ans = map[o];
        if (static_cast<int>(ans.size()) != size) {
          throw ScenarioError(std::string(what) + " answer for outcome " +
                              std::to_string(o) + " has size " +
                              std::to_string(ans.size()) + ", expected " +
                              std::to_string(size));
        }
        std::vector<int> sorted = ans;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          throw ScenarioError(std::string(what) + " answer for outcome " +
                              std::to_string(o) + " repeats an index");
        }
        for (int i : sorted) {
          if (i < 0 || i >= range) {
            throw ScenarioError(std::string(what) + " answer for outcome " +
                                std::to_string(o) + " has index " + std::to_string(i) +
                                " out of range");
          }
        }
      }
    };
    check_map(ways_answers, ways_answer_size, n_paths, "ways");
    check_map(phases_answers, phases_answer_size, phase_count, "phases");
    // Constructing the joint state enforces the dimension cap.
    initial_state();
  }

  /// The joint path/detector state the source emits each round.
  PureState initial_state() const { return interferometer_state(weights, detectors); }
};

/// Outcome of one simulated round.
struct RoundResult {
  Subgame subgame;
  Index hidden;             // path index (ways) or phase index (phases)
  std::vector<int> answer;  // the set the player announced
  bool win;
};

/// Per-scenario sampling tables: the outcome distribution of Alice's
/// measurement for each phase k, and of Bob's measurement for each path j.
///
/// These are exact consequences of the round protocol.  Conditioned on path
/// j, the detector factor is |eta_j> regardless of k (the phase unitary acts
/// on the path factor only), so Bob's outcome distribution depends on j
/// alone.  Conditioned on phase k, Alice's path state is the reduced state
/// U_k rho U_k^dagger.  Sampling from these tables is therefore
/// distribution-identical to simulating the full state round by round.
struct RoundTables {
  std::vector<ProbDist> phase_dists;  // indexed by k
  std::vector<ProbDist> path_dists;   // indexed by j
};

inline RoundTables compile_round_tables(const GameScenario& scenario) {
  scenario.validate();
  RoundTables tables;
  PureState joint = scenario.initial_state();
  PhaseGroup group(scenario.phase_count);
  tables.phase_dists.reserve(static_cast<std::size_t>(scenario.phase_count));
  for (Index k = 0; k < scenario.phase_count; ++k) {
    tables.phase_dists.push_back(
        born_distribution(reduced_path_state(joint, k, group),
                          scenario.alice_phase_povm));
  }
  tables.path_dists.reserve(static_cast<std::size_t>(scenario.n_paths));
  for (Index j = 0; j < scenario.n_paths; ++j) {
    tables.path_dists.push_back(
        born_distribution(scenario.detectors.state(static_cast<std::size_t>(j)),
                          scenario.bob_povm));
  }
  return tables;
}

/// Plays one round with precompiled tables.  Draw order is fixed (sub-game,
/// phase, then path and outcome as needed) so a given stream state always
/// produces the same round.
inline RoundResult play_round(const GameScenario& scenario, const RoundTables& tables,
                              SeedStream& stream) {
  Subgame sub = stream.next_unit() < 0.5 ? Subgame::kWays : Subgame::kPhases;
  // The house always draws the phase, even when the ways sub-game ignores it.
  Index n = scenario.phase_count;
  Index k = std::min<Index>(n - 1, static_cast<Index>(stream.next_unit() *
                                                      static_cast<double>(n)));
  RoundResult result;
  result.subgame = sub;
  if (sub == Subgame::kWays) {
    std::size_t j = sample_index(scenario.weights, stream);
    std::size_t outcome = sample_index(tables.path_dists[j], stream);
    result.hidden = static_cast<Index>(j);
    result.answer = scenario.ways_answers[outcome];
  } else {
    std::size_t outcome =
        sample_index(tables.phase_dists[static_cast<std::size_t>(k)], stream);
    result.hidden = k;
    result.answer = scenario.phases_answers[outcome];
  }
  result.win = std::find(result.answer.begin(), result.answer.end(),
                         static_cast<int>(result.hidden)) != result.answer.end();
  return result;
}

inline RoundResult play_round(const GameScenario& scenario, SeedStream& stream) {
  RoundTables tables = compile_round_tables(scenario);
  return play_round(scenario, tables, stream);
}

/// Exact winning probabilities, by sub-game and overall (fair coin between
/// the two sub-games).
struct WinProbabilities {
  double ways;
  double phases;
  double overall;
};

inline WinProbabilities exact_win_probability(const GameScenario& scenario) {
  RoundTables tables = compile_round_tables(scenario);
  double p_ways = 0.0;
  for (Index j = 0; j < scenario.n_paths; ++j) {
    const ProbDist& dist = tables.path_dists[static_cast<std::size_t>(j)];
    for (std::size_t o = 0; o < dist.size(); ++o) {
      const std::vector<int>& ans = scenario.ways_answers[o];
      if (std::find(ans.begin(), ans.end(), static_cast<int>(j)) != ans.end()) {
        p_ways += scenario.weights[static_cast<std::size_t>(j)] * dist[o];
      }
    }
  }
  double p_phases = 0.0;
  for (Index k = 0; k < scenario.phase_count; ++k) {
    const ProbDist& dist = tables.phase_dists[static_cast<std::size_t>(k)];
    for (std::size_t o = 0; o < dist.size(); ++o) {
      const std::vector<int>& ans = scenario.phases_answers[o];
      if (std::find(ans.begin(), ans.end(), static_cast<int>(k)) != ans.end()) {
        p_phases += dist[o] / static_cast<double>(scenario.phase_count);
      }
    }
  }
  return {p_ways, p_phases, 0.5 * (p_ways + p_phases)};
}

/// Best possible winning probability of the single-guess game in which the
/// player must name the one path (or the one phase) exactly:
/// 1/2 + 1/(2*sqrt(N)).
inline double original_game_bound(Index n_paths) {
  if (n_paths < 1) throw ArgError("path count must be positive");
  return 0.5 + 0.5 / std::sqrt(static_cast<double>(n_paths));
}

struct MonteCarloResult {
  double rate;
  double std_error;  // binomial estimate sqrt(rate*(1-rate)/trials)
  std::uint64_t trials;
  std::uint64_t wins;
};

/// Plays `trials` independent rounds.  Trial i draws from substream(i) of a
/// root stream keyed on `seed`, so the result is reproducible and does not
/// depend on how trials might be batched.
inline MonteCarloResult monte_carlo_win_rate(const GameScenario& scenario,
                                             std::uint64_t trials,
                                             std::uint64_t seed) {
  if (trials == 0) throw ArgError("trial count must be positive");
  RoundTables tables = compile_round_tables(scenario);
  SeedStream root(seed);
  std::uint64_t wins = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    SeedStream trial = root.substream(i);
    if (play_round(scenario, tables, trial).win) wins += 1;
  }
  double rate = static_cast<double>(wins) / static_cast<double>(trials);
  double std_error = std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials));
  return {rate, std_error, trials, wins};
}

}  // namespace dualgame

#endif  // DUALGAME_GAME_HPP
