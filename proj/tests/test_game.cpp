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

#include "dualgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "dualgame/presets.hpp"
#include "test_support.hpp"

using namespace dualgame;
using namespace dualgame_test;

namespace {

/// trine3 with Alice forced to answer a single phase: her best certainty is
/// gone and the exact overall win probability drops to 3/4 (ways side still
/// certain at 1, phases side 1/2).
GameScenario single_guess_phases_scenario() {
  GameScenario s = trine3_scenario();
  s.name = "trine3-single-phase-guess";
  s.phases_answer_size = 1;
  s.phases_answers = {{1}, {0}, {0}};
  s.validate();
  return s;
}

}  // namespace

TEST(scenario, validation_catches_inconsistencies) {
  GameScenario good = trine3_scenario();
  EXPECT_NO_THROW(good.validate());

  GameScenario s = good;
  s.phase_count = 4;
  EXPECT_THROW(s.validate(), ScenarioError);

  s = good;
  s.weights = ProbDist::uniform(2);
  EXPECT_THROW(s.validate(), ScenarioError);

  s = good;
  s.bob_povm = projective_povm(fourier_basis(3, +1));  // wrong space
  EXPECT_THROW(s.validate(), ScenarioError);

  s = good;
  s.alice_phase_povm = anti_trine_povm();  // dimension 2, not 3
  EXPECT_THROW(s.validate(), ScenarioError);

  s = good;
  s.ways_answers = {{1, 2}, {0, 2}};  // one entry short
  EXPECT_THROW(s.validate(), ScenarioError);

  s = good;
  s.ways_answers = {{1, 2}, {0, 2}, {0}};  // wrong size
  EXPECT_THROW(s.validate(), ScenarioError);

  s = good;
  s.phases_answers = {{1, 2}, {0, 2}, {0, 3}};  // index out of range
  EXPECT_THROW(s.validate(), ScenarioError);

  s = good;
  s.phases_answers = {{1, 1}, {0, 2}, {0, 1}};  // repeated index
  EXPECT_THROW(s.validate(), ScenarioError);

  s = good;
  s.ways_answer_size = 0;
  EXPECT_THROW(s.validate(), ScenarioError);
}

TEST(play_round, three_path_preset_always_wins_and_reports_consistently) {
  GameScenario s = trine3_scenario();
  RoundTables tables = compile_round_tables(s);
  SeedStream stream(5);
  int ways_seen = 0, phases_seen = 0;
  for (int i = 0; i < 300; ++i) {
    RoundResult r = play_round(s, tables, stream);
    EXPECT_TRUE(r.win);
    EXPECT_EQ(r.answer.size(), 2u);
    // The win flag must agree with set membership.
    bool member = std::find(r.answer.begin(), r.answer.end(),
                            static_cast<int>(r.hidden)) != r.answer.end();
    EXPECT_EQ(r.win, member);
    (r.subgame == Subgame::kWays ? ways_seen : phases_seen) += 1;
  }
  EXPECT_GT(ways_seen, 0);
  EXPECT_GT(phases_seen, 0);
}

TEST(play_round, identical_streams_replay_identical_rounds) {
  GameScenario s = single_guess_phases_scenario();
  RoundTables tables = compile_round_tables(s);
  SeedStream a(99), b(99);
  for (int i = 0; i < 200; ++i) {
    RoundResult ra = play_round(s, tables, a);
    RoundResult rb = play_round(s, tables, b);
    EXPECT_EQ(ra.subgame, rb.subgame);
    EXPECT_EQ(ra.hidden, rb.hidden);
    EXPECT_EQ(ra.answer, rb.answer);
    EXPECT_EQ(ra.win, rb.win);
  }
}

TEST(play_round, win_flag_matches_membership_on_random_scenarios) {
  // Scenarios whose answers are arbitrary singletons: wins and losses both
  // occur, and the flag must track membership exactly.
  GameScenario s = trine3_scenario();
  s.ways_answer_size = 1;
  s.ways_answers = {{1}, {2}, {0}};
  s.phases_answer_size = 1;
  s.phases_answers = {{1}, {2}, {0}};
  s.validate();
  RoundTables tables = compile_round_tables(s);
  SeedStream stream(13);
  int wins = 0, losses = 0;
  for (int i = 0; i < 500; ++i) {
    RoundResult r = play_round(s, tables, stream);
    bool member = std::find(r.answer.begin(), r.answer.end(),
                            static_cast<int>(r.hidden)) != r.answer.end();
    EXPECT_EQ(r.win, member);
    (r.win ? wins : losses) += 1;
  }
  EXPECT_GT(wins, 0);
  EXPECT_GT(losses, 0);
}

TEST(exact_win_probability, presets_win_with_certainty) {
  EXPECT_NEAR(exact_win_probability(trine3_scenario()).overall, 1.0, 1e-12);
  EXPECT_NEAR(exact_win_probability(sixpair4_scenario()).overall, 1.0, 1e-12);
  EXPECT_NEAR(exact_win_probability(twopair4_scenario()).overall, 1.0, 1e-12);
}

TEST(exact_win_probability, hand_computed_value_for_a_single_guess_variant) {
  // Phases side: outcome o rules out phase o.  With answers {1},{0},{0} the
  // winning combinations give (1 + 1/2 + 0)/3 = 1/2; ways side stays 1.
  WinProbabilities p = exact_win_probability(single_guess_phases_scenario());
  EXPECT_NEAR(p.ways, 1.0, 1e-12);
  EXPECT_NEAR(p.phases, 0.5, 1e-12);
  EXPECT_NEAR(p.overall, 0.75, 1e-12);
}

TEST(exact_win_probability, every_certain_answer_is_minimal) {
  // Shrinking any answer of the three-path preset to one of its two indices
  // must break certainty, on either side of the game.
  GameScenario base = trine3_scenario();
  for (int mask = 0; mask < 8; ++mask) {
    GameScenario s = base;
    s.ways_answer_size = 1;
    s.ways_answers.clear();
    for (std::size_t o = 0; o < 3; ++o) {
      s.ways_answers.push_back({base.ways_answers[o][(mask >> o) & 1]});
    }
    EXPECT_LT(exact_win_probability(s).overall, 1.0 - 1e-12) << "ways mask " << mask;
  }
  for (int mask = 0; mask < 8; ++mask) {
    GameScenario s = base;
    s.phases_answer_size = 1;
    s.phases_answers.clear();
    for (std::size_t o = 0; o < 3; ++o) {
      s.phases_answers.push_back({base.phases_answers[o][(mask >> o) & 1]});
    }
    EXPECT_LT(exact_win_probability(s).overall, 1.0 - 1e-12)
        << "phases mask " << mask;
  }
}

TEST(original_game_bound, closed_form_values) {
  EXPECT_DOUBLE_EQ(original_game_bound(1), 1.0);
  EXPECT_DOUBLE_EQ(original_game_bound(4), 0.75);
  EXPECT_NEAR(original_game_bound(3), kSingleGuessCap3, 1e-12);
  EXPECT_THROW(original_game_bound(0), ArgError);
}

TEST(monte_carlo, certain_scenarios_never_lose) {
  MonteCarloResult mc = monte_carlo_win_rate(trine3_scenario(), 10000, 3);
  EXPECT_EQ(mc.wins, mc.trials);
  EXPECT_EQ(mc.rate, 1.0);
  EXPECT_EQ(mc.std_error, 0.0);
}

TEST(monte_carlo, reproducible_and_consistent_with_exact_rate) {
  GameScenario s = single_guess_phases_scenario();
  MonteCarloResult first = monte_carlo_win_rate(s, 20000, 11);
  MonteCarloResult again = monte_carlo_win_rate(s, 20000, 11);
  EXPECT_EQ(first.wins, again.wins);
  double exact = exact_win_probability(s).overall;
  double sigma = std::sqrt(exact * (1.0 - exact) / 20000.0);
  EXPECT_NEAR(first.rate, exact, 5.0 * sigma);
  MonteCarloResult other_seed = monte_carlo_win_rate(s, 20000, 12);
  EXPECT_NEAR(other_seed.rate, exact, 5.0 * sigma);
  EXPECT_THROW(monte_carlo_win_rate(s, 0, 1), ArgError);
}

TEST(monte_carlo, subgame_coin_is_fair) {
  GameScenario s = trine3_scenario();
  RoundTables tables = compile_round_tables(s);
  SeedStream root(21);
  const int n = 20000;
  int ways = 0;
  for (int i = 0; i < n; ++i) {
    SeedStream trial = root.substream(static_cast<std::uint64_t>(i));
    if (play_round(s, tables, trial).subgame == Subgame::kWays) ways += 1;
  }
  // 5 sigma with sigma = sqrt(n)/2.
  EXPECT_NEAR(ways, n / 2.0, 5.0 * std::sqrt(static_cast<double>(n)) / 2.0);
}
