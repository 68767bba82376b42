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

#ifndef DUALGAME_PRESETS_HPP
#define DUALGAME_PRESETS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualgame/game.hpp"
#include "dualgame/measure.hpp"
#include "dualgame/qcore.hpp"
#include "dualgame/states.hpp"

namespace dualgame {

/// Three paths with trine detectors, both players winning with certainty.
///
/// Bob's anti-trine measurement outcome j excludes path j, so he names the
/// other two paths.  Alice measures in the Fourier basis; the reduced path
/// state after phase k is orthogonal to Fourier vector k, so her outcome o
/// excludes phase o and she names the other two phases.  Both answers have
/// size 2 and are always right, while single guesses would be capped at
/// 1/2 + 1/(2*sqrt(3)).
inline GameScenario trine3_scenario() {
  GameScenario s;
  s.name = "trine3";
  s.n_paths = 3;
  s.phase_count = 3;
  s.weights = ProbDist::uniform(3);
  s.detectors = trine_detectors();
  s.bob_povm = anti_trine_povm();
  s.alice_phase_povm = projective_povm(fourier_basis(3, +1));
  s.ways_answer_size = 2;
  s.phases_answer_size = 2;
  s.ways_answers = {{1, 2}, {0, 2}, {0, 1}};
  s.phases_answers = {{1, 2}, {0, 2}, {0, 1}};
  s.validate();
  return s;
}

/// Four paths with tetrahedral detectors.
///
/// Bob's six-outcome pair measurement names the pair {j,k} it confirms;
/// the true path is always inside that pair.  Alice measures the Fourier
/// basis; outcome o excludes phase o, leaving a 3-element answer.  Bob's
/// information is maximal for pair answers (1 bit) but Alice's measurement
/// extracts less than the remaining budget, so the trade-off is strict.
inline GameScenario sixpair4_scenario() {
  GameScenario s;
  s.name = "sixpair4";
  s.n_paths = 4;
  s.phase_count = 4;
  s.weights = ProbDist::uniform(4);
  s.detectors = simplex4_detectors();
  s.bob_povm = six_pair_povm();
  s.alice_phase_povm = projective_povm(fourier_basis(4, +1));
  s.ways_answer_size = 2;
  s.phases_answer_size = 3;
  s.ways_answers.clear();
  for (std::size_t o = 0; o < s.bob_povm.size(); ++o) {
    s.ways_answers.push_back(s.bob_povm[o].label.indices());
  }
  s.phases_answers = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  s.validate();
  return s;
}

/// Four paths in two pairs, with one qubit detector marking the pair:
/// paths 0 and 2 set the detector to |1>, paths 1 and 3 to |0>.
///
/// Bob reads the detector in the computational basis and learns the parity
/// pair exactly (1 bit).  The reduced path states come in two orthogonal
/// rank-2 blends, and the Fourier measurement pins the phase down to a
/// parity class of phases (another bit), so both answers are certain and
/// the information trade-off is saturated: 1 + 1 = log2(4).
inline GameScenario twopair4_scenario() {
  GameScenario s;
  s.name = "twopair4";
  s.n_paths = 4;
  s.phase_count = 4;
  s.weights = ProbDist::uniform(4);
  Vector zero(2), one(2);
  zero << 1.0, 0.0;
  one << 0.0, 1.0;
  s.detectors = DetectorFamily(
      2, {PureState::single(one), PureState::single(zero), PureState::single(one),
          PureState::single(zero)});
  // Outcome labels name the pair of paths each detector reading confirms.
  s.bob_povm = projective_povm({PureState::single(zero), PureState::single(one)},
                               {OutcomeLabel::pair(1, 3), OutcomeLabel::pair(0, 2)});
  s.alice_phase_povm = projective_povm(fourier_basis(4, +1));
  s.ways_answer_size = 2;
  s.phases_answer_size = 2;
  s.ways_answers = {{1, 3}, {0, 2}};
  s.phases_answers = {{0, 2}, {1, 3}, {0, 2}, {1, 3}};
  s.validate();
  return s;
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"trine3", "sixpair4", "twopair4"};
  return names;
}

inline std::optional<GameScenario> preset_scenario(std::string_view name) {
  if (name == "trine3") return trine3_scenario();
  if (name == "sixpair4") return sixpair4_scenario();
  if (name == "twopair4") return twopair4_scenario();
  return std::nullopt;
}

}  // namespace dualgame

#endif  // DUALGAME_PRESETS_HPP
