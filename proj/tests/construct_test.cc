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

#include "dikroma/construct.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "checks.h"
#include "dikroma/families.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace dikroma {
namespace {

using ::testing::IsEmpty;
using ::testing::UnorderedElementsAreArray;

Digraph Triangle() { return Digraph::Build(3, {{0, 1}, {1, 2}, {2, 0}}); }

TEST(AttachPathTest, ZeroLengthReturnsBase) {
  const Digraph base = Hps(3, 0);
  EXPECT_EQ(AttachPath({base, 4, 0}), base);
}

TEST(AttachPathTest, CompleteSymmetricWithTwoPathVertices) {
  // v1 = 3, v2 = 4. Both 1 and 2 are out-neighbors of v0 = 0, so they send
  // arcs to v1 and receive arcs from v2.
  const Digraph d = AttachPath({CompleteSymmetric(3), 0, 2});
  std::vector<Arc> expected = CompleteSymmetric(3).Arcs();
  for (const Arc& a : std::vector<Arc>{{0, 3}, {3, 4}, {4, 0}, {1, 3}, {2, 3}, {4, 1}, {4, 2}}) expected.push_back(a);
  EXPECT_EQ(d.order(), 5);
  EXPECT_THAT(d.Arcs(), UnorderedElementsAreArray(expected));
}

TEST(AttachPathTest, TriangleStaysTournament) {
  // N+(0) = {1}, N-(0) \ N+(0) = {2}.
  const Digraph d = AttachPath({Triangle(), 0, 2});
  std::vector<Arc> expected = Triangle().Arcs();
  for (const Arc& a : std::vector<Arc>{{0, 3}, {3, 4}, {4, 0}, {1, 3}, {4, 1}, {3, 2}, {2, 4}}) expected.push_back(a);
  EXPECT_THAT(d.Arcs(), UnorderedElementsAreArray(expected));
  EXPECT_TRUE(GetTournamentProperties(d).is_tournament);
}

TEST(AttachPathTest, NonAdjacentVerticesGetNoArcs) {
  // 2 is not adjacent to the anchor 0.
  const Digraph base = Digraph::Build(3, {{0, 1}, {1, 2}});
  const Digraph d = AttachPath({base, 0, 3});
  for (int j = 3; j < 6; ++j) {
    EXPECT_FALSE(d.HasArc(2, j));
    EXPECT_FALSE(d.HasArc(j, 2));
  }
}

TEST(AttachPathTest, SymmetricNeighborFollowsOutRule) {
  const Digraph base = Digraph::Build(2, {{0, 1}, {1, 0}});
  const Digraph d = AttachPath({base, 0, 2});
  EXPECT_TRUE(d.HasArc(1, 2));  // (x, v1)
  EXPECT_TRUE(d.HasArc(3, 1));  // (v2, x)
  EXPECT_FALSE(d.HasArc(2, 1));
  EXPECT_FALSE(d.HasArc(1, 3));
}

TEST(AttachPathTest, RejectsBadParameters) {
  EXPECT_THROW(AttachPath({Triangle(), 3, 1}), std::out_of_range);
  EXPECT_THROW(AttachPath({Triangle(), 0, -1}), std::invalid_argument);
}

TEST(MimicryTest, Examples) {
  const PathAttachment k3{CompleteSymmetric(3), 0, 2};
  EXPECT_THAT(MimicryViolations(AttachPath(k3), k3), IsEmpty());
  const PathAttachment tri{Triangle(), 0, 4};
  EXPECT_THAT(MimicryViolations(AttachPath(tri), tri), IsEmpty());
  const PathAttachment none{Triangle(), 1, 0};
  EXPECT_THAT(MimicryViolations(AttachPath(none), none), IsEmpty());
}

TEST(MimicryTest, ReportsTamperedArc) {
  const PathAttachment params{CompleteSymmetric(3), 0, 2};
  std::vector<Arc> arcs = AttachPath(params).Arcs();
  std::erase(arcs, Arc{4, 1});
  EXPECT_EQ(MimicryViolations(Digraph::Build(5, arcs), params).size(), 1u);
}

class AttachPathPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{7};
};

TEST_F(AttachPathPropertyTest, StructuralInvariants) {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const Digraph base = testing::RandomDigraph(rng_, n, 0.45);
    const PathAttachment params{base, static_cast<int>(rng_() % n), static_cast<int>(rng_() % 7)};
    const Digraph d = AttachPath(params);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EXPECT_EQ(d.arc_count(), testing::ExpectedAttachedArcCount(params));
    EXPECT_TRUE(testing::ParityClassesAreTransitive(d, params));
    EXPECT_THAT(MimicryViolations(d, params), IsEmpty());
    EXPECT_EQ(InducedSubdigraph(d, VertexSet::FromVector(d.order(), [&] {
                std::vector<int> v(n);
                std::iota(v.begin(), v.end(), 0);
                return v;
              }())),
              base);
  }
}

TEST_F(AttachPathPropertyTest, PreservesTournamentsAndAsymmetry) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const Digraph tournament = testing::TournamentFromBits(n, rng_());
    const PathAttachment params{tournament, static_cast<int>(rng_() % n), 1 + static_cast<int>(rng_() % 6)};
    const Digraph d = AttachPath(params);
    EXPECT_TRUE(GetTournamentProperties(d).is_tournament);
    EXPECT_EQ(ClassifySymmetry(d), Symmetry::kAsymmetric);
  }
}

}  // namespace
}  // namespace dikroma
