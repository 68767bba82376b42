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

#include "dualgame/measure.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace dualgame;
using namespace dualgame_test;

namespace {

Matrix povm_sum(const Povm& povm) {
  Matrix sum = Matrix::Zero(povm.dim(), povm.dim());
  for (std::size_t i = 0; i < povm.size(); ++i) sum += povm[i].op;
  return sum;
}

}  // namespace

TEST(outcome_label, sorts_validates_and_prints) {
  OutcomeLabel pair = OutcomeLabel::pair(3, 1);
  EXPECT_EQ(pair.indices(), (std::vector<int>{1, 3}));
  EXPECT_EQ(pair.str(), "{1,3}");
  EXPECT_TRUE(pair.contains(3));
  EXPECT_FALSE(pair.contains(2));
  EXPECT_EQ(OutcomeLabel::single(2).str(), "2");
  EXPECT_THROW(OutcomeLabel({1, 1}), ArgError);
  EXPECT_THROW(OutcomeLabel({-1}), ArgError);
  EXPECT_THROW(OutcomeLabel({}), ArgError);
}

TEST(povm, rejects_invalid_element_sets) {
  Matrix half = 0.5 * Matrix::Identity(2, 2);
  // Incomplete.
  EXPECT_THROW(Povm(2, {{OutcomeLabel::single(0), half}}), ArgError);
  // Complete but with a negative direction.
  Matrix spike = Matrix::Zero(2, 2);
  spike(0, 0) = 1.5;
  spike(1, 1) = 0.5;
  Matrix rest = Matrix::Identity(2, 2) - spike;
  EXPECT_THROW(Povm(2, {{OutcomeLabel::single(0), spike},
                        {OutcomeLabel::single(1), rest}}),
               ArgError);
  // Non-Hermitian element.
  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 0.3;
  EXPECT_THROW(Povm(2, {{OutcomeLabel::single(0), half + skew},
                        {OutcomeLabel::single(1), half - skew}}),
               ArgError);
  // Wrong shape.
  EXPECT_THROW(Povm(3, {{OutcomeLabel::single(0), Matrix::Identity(2, 2)}}),
               ArgError);
  // The identity by itself is a (trivial) valid measurement.
  EXPECT_NO_THROW(Povm(2, {{OutcomeLabel::single(0), Matrix::Identity(2, 2)}}));
}

TEST(anti_trine_povm, excludes_its_partner_and_splits_the_rest) {
  Povm povm = anti_trine_povm();
  DetectorFamily trine = trine_detectors();
  EXPECT_EQ(povm.size(), 3u);
  EXPECT_LT(max_abs_diff(povm_sum(povm), Matrix::Identity(2, 2)), 1e-9);
  for (std::size_t j = 0; j < 3; ++j) {
    ProbDist dist = born_distribution(trine.state(j), povm);
    for (std::size_t o = 0; o < 3; ++o) {
      EXPECT_NEAR(dist[o], o == j ? 0.0 : 0.5, 1e-12)
          << "state " << j << " outcome " << o;
    }
  }
}

TEST(six_pair_povm, certifies_pairs_with_flat_probabilities) {
  Povm povm = six_pair_povm();
  DetectorFamily dets = simplex4_detectors();
  EXPECT_EQ(povm.size(), 6u);
  EXPECT_EQ(povm.dim(), 3);
  EXPECT_LT(max_abs_diff(povm_sum(povm), Matrix::Identity(3, 3)), 1e-9);
  for (std::size_t j = 0; j < 4; ++j) {
    ProbDist dist = born_distribution(dets.state(j), povm);
    for (std::size_t o = 0; o < 6; ++o) {
      bool inside = povm[o].label.contains(static_cast<int>(j));
      // A detector state hits each of its three containing pairs with
      // probability exactly 1/3 and never hits the complement.
      EXPECT_NEAR(dist[o], inside ? 1.0 / 3.0 : 0.0, 1e-12)
          << "state " << j << " outcome " << povm[o].label.str();
    }
  }
}

TEST(projective_povm, wraps_orthonormal_bases_and_rejects_others) {
  std::vector<PureState> u = fourier_basis(3, +1);
  Povm povm = projective_povm(u);
  EXPECT_EQ(povm.size(), 3u);
  EXPECT_LT(max_abs_diff(povm_sum(povm), Matrix::Identity(3, 3)), 1e-9);
  // Measuring a basis vector is deterministic.
  ProbDist dist = born_distribution(u[1], povm);
  EXPECT_NEAR(dist[0], 0.0, 1e-12);
  EXPECT_NEAR(dist[1], 1.0, 1e-12);
  EXPECT_NEAR(dist[2], 0.0, 1e-12);
  // Non-orthogonal family.
  DetectorFamily trine = trine_detectors();
  EXPECT_THROW(projective_povm({trine.state(0), trine.state(1)}), ArgError);
  // Wrong vector count for the dimension.
  EXPECT_THROW(projective_povm({PureState::basis(3, 0), PureState::basis(3, 1)}),
               ArgError);
  // Custom labels must match the basis size.
  EXPECT_THROW(projective_povm({PureState::basis(2, 0), PureState::basis(2, 1)},
                               {OutcomeLabel::single(0)}),
               ArgError);
}

TEST(born_distribution, known_values_and_dimension_checks) {
  // Reduced three-path state against the Fourier measurement.
  std::vector<PureState> u = fourier_basis(3, +1);
  Matrix rho = 0.5 * (u[1].amplitudes() * u[1].amplitudes().adjoint() +
                      u[2].amplitudes() * u[2].amplitudes().adjoint());
  ProbDist dist = born_distribution(DensityMatrix(rho), projective_povm(u));
  EXPECT_NEAR(dist[0], 0.0, 1e-12);
  EXPECT_NEAR(dist[1], 0.5, 1e-12);
  EXPECT_NEAR(dist[2], 0.5, 1e-12);
  // Labels ride along.
  EXPECT_EQ(dist.label(1), "1");
  // Mismatched dimensions are rejected.
  EXPECT_THROW(born_distribution(PureState::basis(2, 0), projective_povm(u)),
               DimensionError);
}

TEST(sample_outcome, deterministic_streams_and_correct_frequencies) {
  Povm povm = anti_trine_povm();
  DetectorFamily trine = trine_detectors();
  // Identical streams give identical outcome sequences.
  SeedStream a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(sample_outcome(trine.state(1), povm, a).str(),
              sample_outcome(trine.state(1), povm, b).str());
  }
  // Outcome 1 is impossible for trine state 1; the others are even.
  SeedStream stream(42);
  const int n = 100000;
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < n; ++i) {
    counts[sample_outcome(trine.state(1), povm, stream).indices()[0]] += 1;
  }
  EXPECT_EQ(counts[1], 0);
  // 5 sigma around n/2 with sigma = sqrt(n)/2.
  double sigma = std::sqrt(static_cast<double>(n)) / 2.0;
  EXPECT_NEAR(counts[0], n / 2.0, 5.0 * sigma);
  EXPECT_NEAR(counts[2], n / 2.0, 5.0 * sigma);
}

TEST(sample_outcome, frequencies_track_a_generic_distribution) {
  // A deliberately lopsided qubit measurement.
  Matrix heavy = Matrix::Zero(2, 2);
  heavy(0, 0) = 0.9;
  heavy(1, 1) = 0.2;
  Povm povm(2, {{OutcomeLabel::single(0), heavy},
                {OutcomeLabel::single(1), Matrix::Identity(2, 2) - heavy}});
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  PureState psi = PureState::single(plus);
  ProbDist exact = born_distribution(psi, povm);
  SeedStream stream(1234);
  const int n = 200000;
  int count0 = 0;
  for (int i = 0; i < n; ++i) {
    if (sample_outcome(psi, povm, stream).indices()[0] == 0) count0 += 1;
  }
  double sigma = std::sqrt(exact[0] * (1 - exact[0]) * n);
  EXPECT_NEAR(count0, exact[0] * n, 5.0 * sigma);
}

TEST(verify_exclusion, anti_trine_rules_out_exactly_its_partner) {
  Povm povm = anti_trine_povm();
  DetectorFamily trine = trine_detectors();
  std::vector<Hypothesis> hyps;
  for (int j = 0; j < 3; ++j) {
    hyps.push_back({{j}, projector(trine.state(static_cast<std::size_t>(j)))});
  }
  std::vector<std::vector<std::size_t>> intended = {{0}, {1}, {2}};
  ExclusionReport report = verify_exclusion(povm, hyps, intended);
  EXPECT_TRUE(report.passed);
  EXPECT_TRUE(report.every_outcome_excludes);
  EXPECT_TRUE(report.intended_covered);
  for (std::size_t o = 0; o < 3; ++o) {
    ASSERT_EQ(report.excluded_by_outcome[o].size(), 1u);
    EXPECT_EQ(report.excluded_by_outcome[o][0], o);
  }
  // Demanding an exclusion that does not hold must fail the check.
  std::vector<std::vector<std::size_t>> wrong = {{1}, {1}, {2}};
  EXPECT_FALSE(verify_exclusion(povm, hyps, wrong).intended_covered);
}

TEST(verify_exclusion, six_pair_outcomes_rule_out_the_complement) {
  Povm povm = six_pair_povm();
  DetectorFamily dets = simplex4_detectors();
  std::vector<Hypothesis> hyps;
  for (int j = 0; j < 4; ++j) {
    hyps.push_back({{j}, projector(dets.state(static_cast<std::size_t>(j)))});
  }
  std::vector<std::vector<std::size_t>> intended;
  for (std::size_t o = 0; o < povm.size(); ++o) {
    std::vector<std::size_t> missing;
    for (std::size_t j = 0; j < 4; ++j) {
      if (!povm[o].label.contains(static_cast<int>(j))) missing.push_back(j);
    }
    intended.push_back(std::move(missing));
  }
  ExclusionReport report = verify_exclusion(povm, hyps, intended);
  EXPECT_TRUE(report.passed);
  for (std::size_t o = 0; o < povm.size(); ++o) {
    EXPECT_EQ(report.excluded_by_outcome[o].size(), 2u);
  }
}

TEST(verify_exclusion, flags_misses_and_near_misses) {
  // A computational-basis measurement does not exclude anything about the
  // plus state.
  Povm basis = projective_povm({PureState::basis(2, 0), PureState::basis(2, 1)});
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  ExclusionReport miss =
      verify_exclusion(basis, {{{0}, projector(PureState::single(plus))}});
  EXPECT_FALSE(miss.every_outcome_excludes);
  EXPECT_FALSE(miss.passed);

  // A state tilted 2e-4 away from |1> leaves a 4e-8 residue on outcome 0:
  // small enough to miss the exclusion cut, big enough to be reported.
  double eps = 2e-4;
  Vector tilted(2);
  tilted << eps, std::sqrt(1.0 - eps * eps);
  ExclusionReport near =
      verify_exclusion(basis, {{{0}, projector(PureState::single(tilted))}});
  bool found_near_miss = false;
  for (const ExclusionEntry& e : near.entries) {
    if (e.near_miss) {
      found_near_miss = true;
      EXPECT_EQ(e.outcome, 0u);
      EXPECT_NEAR(e.probability, eps * eps, 1e-10);
    }
  }
  EXPECT_TRUE(found_near_miss);
  EXPECT_NE(near.str().find("near miss"), std::string::npos);
}
