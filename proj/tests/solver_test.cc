// Copyright 2026 The Dikroma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dikroma/solver.h"

#include <random>

#include "dikroma/families.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace dikroma {
namespace {

Digraph Triangle() { return Digraph::Build(3, {{0, 1}, {1, 2}, {2, 0}}); }

TEST(FindAcyclicColoringTest, Examples) {
  ColoringSearch s = FindAcyclicColoring(Triangle(), 2);
  ASSERT_EQ(s.outcome, SearchOutcome::kFound);
  EXPECT_EQ(s.coloring->k(), 2);
  EXPECT_TRUE(IsAcyclicColoring(Triangle(), *s.coloring));

  EXPECT_EQ(FindAcyclicColoring(Triangle(), 1).outcome, SearchOutcome::kNone);
  EXPECT_EQ(FindAcyclicColoring(Hps(3, 0), 2).outcome, SearchOutcome::kNone);
  EXPECT_EQ(FindAcyclicColoring(Triangle(), 4).outcome, SearchOutcome::kNone);
}

TEST(FindCompleteAcyclicColoringTest, Examples) {
  ColoringSearch s = FindCompleteAcyclicColoring(CompleteSymmetric(3), 3);
  ASSERT_EQ(s.outcome, SearchOutcome::kFound);
  EXPECT_EQ(*s.coloring, Coloring({1, 2, 3}));

  EXPECT_EQ(FindCompleteAcyclicColoring(TransitiveTournament(3), 3).outcome, SearchOutcome::kNone);
  EXPECT_FALSE(testing::BruteForce(TransitiveTournament(3)).complete_acyclic[3]);

  s = FindCompleteAcyclicColoring(FullCirculantTournament(7), 4);
  ASSERT_EQ(s.outcome, SearchOutcome::kFound);
  EXPECT_TRUE(IsCompleteColoring(FullCirculantTournament(7), *s.coloring));
}

TEST(DichromaticNumberTest, Examples) {
  EXPECT_EQ(DichromaticNumber(TransitiveTournament(6)).value, 1);
  EXPECT_EQ(DichromaticNumber(CompleteSymmetric(4)).value, 4);
  EXPECT_EQ(DichromaticNumber(FullCirculantTournament(9)).value, 2);
  const SolveResult h4 = DichromaticNumber(Hps(4, 0));
  EXPECT_EQ(h4.value, 4);
  EXPECT_TRUE(h4.exact);
  EXPECT_EQ(h4.witness->k(), 4);
}

TEST(DiachromaticNumberTest, Examples) {
  EXPECT_EQ(DiachromaticNumber(TransitiveTournament(5)).value, 3);
  EXPECT_EQ(DiachromaticNumber(Hps(3, 0)).value, 4);
  EXPECT_EQ(DiachromaticNumber(Hps(3, 1)).value, 5);
  EXPECT_EQ(DiachromaticNumber(CompleteSymmetric(3)).value, 3);
}

TEST(SolverTest, EmptyDigraph) {
  EXPECT_EQ(DichromaticNumber(Digraph()).value, 0);
  EXPECT_EQ(DiachromaticNumber(Digraph()).value, 0);
}

TEST(SolverTest, RejectsHugeDigraphs) {
  EXPECT_THROW(DichromaticNumber(TransitiveTournament(65)), std::invalid_argument);
}

TEST(DacUpperBoundTest, Examples) {
  EXPECT_EQ(DacUpperBound(Triangle()), 2);
  EXPECT_EQ(DacUpperBound(CompleteSymmetric(4)), 4);
  EXPECT_EQ(DacUpperBound(Digraph::Build(1, {})), 1);
}

TEST(InterpolationSpectrumTest, Examples) {
  Spectrum s = InterpolationSpectrum(FullCirculantTournament(7));
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_EQ(s.entries[0].colors, 2);
  EXPECT_EQ(s.entries[2].colors, 4);
  EXPECT_TRUE(s.gaps.empty());

  s = InterpolationSpectrum(TransitiveTournament(4));
  ASSERT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.entries[0].colors, 1);
  EXPECT_EQ(s.entries[1].colors, 2);

  s = InterpolationSpectrum(Digraph::Build(1, {}));
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(*s.entries[0].witness, Coloring({1}));
}

TEST(VertexCriticalityTest, Examples) {
  EXPECT_TRUE(IsVertexCritical(Hps(3, 0)));
  EXPECT_TRUE(IsVertexCritical(Triangle()));
  const CriticalityReport tt = CheckVertexCriticality(TransitiveTournament(4));
  EXPECT_FALSE(tt.critical);
  EXPECT_EQ(tt.stable_vertices.size(), 4u);
}

TEST(SingletonOptimalColoringTest, Examples) {
  const Digraph h3 = Hps(3, 0);
  auto s = SingletonOptimalColoring(h3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->coloring.k(), 3);
  EXPECT_TRUE(IsAcyclicColoring(h3, s->coloring));
  EXPECT_EQ(s->coloring.ClassOf(s->coloring.ColorOf(s->vertex)).Count(), 1);

  s = SingletonOptimalColoring(CompleteSymmetric(3));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->coloring.k(), 3);

  EXPECT_FALSE(SingletonOptimalColoring(TransitiveTournament(3)).has_value());
}

TEST(BudgetTest, NodeLimitYieldsUnknown) {
  SolverOptions options;
  options.budget.max_nodes = 5;
  const ColoringSearch s = FindCompleteAcyclicColoring(Hps(4, 0), 8, options);
  EXPECT_EQ(s.outcome, SearchOutcome::kUnknown);
  EXPECT_FALSE(s.coloring.has_value());

  const SolveResult dac = DiachromaticNumber(Hps(4, 0), options);
  EXPECT_FALSE(dac.exact);
  EXPECT_GE(dac.upper_bound, 7);
  EXPECT_THROW(IsVertexCritical(Hps(4, 0), options), BudgetExhausted);
}

TEST(BudgetTest, TimeLimitYieldsUnknown) {
  SolverOptions options;
  options.budget.max_seconds = 0.0;
  EXPECT_EQ(FindCompleteAcyclicColoring(Hps(4, 0), 8, options).outcome, SearchOutcome::kUnknown);
}

TEST(BudgetTest, GenerousBudgetStaysExact) {
  SolverOptions options;
  options.budget.max_nodes = 10'000'000;
  options.budget.max_seconds = 600;
  const SolveResult dac = DiachromaticNumber(Hps(3, 1), options);
  EXPECT_TRUE(dac.exact);
  EXPECT_EQ(dac.value, 5);
}

class SolverOracleTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{424242};
};

TEST_F(SolverOracleTest, MatchesBruteForceOnRandomDigraphs) {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const Digraph d = testing::RandomDigraph(rng_, n, 0.2 + 0.1 * (trial % 7));
    const testing::OracleValues oracle = testing::BruteForce(d);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EXPECT_EQ(DichromaticNumber(d).value, oracle.dc);
    EXPECT_EQ(DiachromaticNumber(d).value, oracle.dac);
    for (int k = 1; k <= n; ++k) {
      EXPECT_EQ(FindAcyclicColoring(d, k).outcome == SearchOutcome::kFound, static_cast<bool>(oracle.acyclic[k]));
      EXPECT_EQ(FindCompleteAcyclicColoring(d, k).outcome == SearchOutcome::kFound,
                static_cast<bool>(oracle.complete_acyclic[k]));
    }
  }
}

TEST_F(SolverOracleTest, StructuralLaws) {
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 7;
    const Digraph d = testing::RandomDigraph(rng_, n, 0.5);
    const int dc = DichromaticNumber(d).value;
    EXPECT_LE(dc, DiachromaticNumber(d).value);
    for (int v = 0; v < n; ++v) {
      const int dc_minus = DichromaticNumber(DeleteVertex(d, v)).value;
      EXPECT_TRUE(dc_minus == dc || dc_minus == dc - 1);
    }
    for (int k = dc; k <= n; ++k) EXPECT_EQ(FindAcyclicColoring(d, k).outcome, SearchOutcome::kFound);
  }
}

TEST_F(SolverOracleTest, ThreadCountDoesNotChangeAnswers) {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 6;
    const Digraph d = testing::RandomDigraph(rng_, n, 0.5);
    const SolveResult dc1 = DichromaticNumber(d, {{}, 1});
    const SolveResult dac1 = DiachromaticNumber(d, {{}, 1});
    for (int threads : {2, 4, 7}) {
      const SolveResult dc = DichromaticNumber(d, {{}, threads});
      const SolveResult dac = DiachromaticNumber(d, {{}, threads});
      EXPECT_EQ(dc.value, dc1.value);
      EXPECT_EQ(dac.value, dac1.value);
      EXPECT_EQ(*dc.witness, *dc1.witness);
      EXPECT_EQ(*dac.witness, *dac1.witness);
    }
  }
  EXPECT_EQ(DiachromaticNumber(Hps(4, 0), {{}, 4}).value, 7);
}

}  // namespace
}  // namespace dikroma
