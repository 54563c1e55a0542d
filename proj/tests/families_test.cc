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

#include "dikroma/families.h"

#include <numeric>
#include <set>
#include <stdexcept>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace dikroma {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

// Independent antisymmetry check: the residues and their negatives partition
// 1..m-1.
bool PartitionsNonzeroResidues(int m, const std::vector<int>& j) {
  std::set<int> seen;
  for (int w : j) {
    if (!seen.insert(w).second || !seen.insert(m - w).second) return false;
  }
  return static_cast<int>(seen.size()) == m - 1;
}

TEST(CirculantTest, TriangleIsSmallestTournament) {
  EXPECT_EQ(Circulant({3, {1}}), Digraph::Build(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST(CirculantTest, SevenVertexRegularTournament) {
  const Digraph d = Circulant({7, {1, 2, 3}});
  const TournamentProperties props = GetTournamentProperties(d);
  EXPECT_TRUE(props.is_tournament);
  EXPECT_TRUE(props.is_regular);
  for (int v = 0; v < 7; ++v) EXPECT_EQ(d.OutDegree(v), 3);
}

TEST(CirculantTest, PaleyTypeMatchesHps30) {
  const Digraph c = Circulant({7, {1, 2, 4}});
  const Digraph h = Hps(3, 0);
  for (int u = 0; u < 7; ++u) {
    for (int v = 0; v < 7; ++v) EXPECT_EQ(c.HasArc(u, v), h.HasArc(u, v)) << u << "->" << v;
  }
}

TEST(CirculantTest, RejectsBadConnectionSets) {
  try {
    Circulant({7, {1, 2, 5}});
    FAIL() << "expected antisymmetry violation";
  } catch (const std::invalid_argument& e) {
    EXPECT_THAT(e.what(), HasSubstr("antisymmetry at residue 2"));
  }
  EXPECT_THROW(Circulant({7, {0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(Circulant({7, {1, 2, 7}}), std::invalid_argument);
  EXPECT_THROW(Circulant({4, {1}}), std::invalid_argument);
}

TEST(FullCirculantTest, Basic) {
  EXPECT_EQ(FullCirculantTournament(3), Circulant({3, {1}}));
  EXPECT_EQ(FullCirculantTournament(7), Circulant({7, {1, 2, 3}}));
  EXPECT_EQ(FullCirculantTournament(9), Circulant({9, {1, 2, 3, 4}}));
  EXPECT_THROW(FullCirculantTournament(8), std::invalid_argument);
  EXPECT_THROW(FullCirculantTournament(1), std::invalid_argument);
}

TEST(FullCirculantTest, AlwaysRegular) {
  for (int m = 3; m <= 31; m += 2) EXPECT_TRUE(GetTournamentProperties(FullCirculantTournament(m)).is_regular) << m;
}

TEST(HpsTest, ParametersAndBlocks) {
  const HpsParams h30{3, 0};
  EXPECT_EQ(h30.p(), 2);
  EXPECT_EQ(h30.modulus(), 7);
  EXPECT_EQ(HpsSpec(h30).connection_set, (std::vector<int>{1, 2, 4}));

  // Blocks {1..3}, {5,6}, {9}; antisymmetric mod 13 with 6 residues.
  const CirculantSpec h40 = HpsSpec({4, 0});
  EXPECT_EQ(h40.modulus, 13);
  EXPECT_EQ(h40.connection_set, (std::vector<int>{1, 2, 3, 5, 6, 9}));
  EXPECT_TRUE(PartitionsNonzeroResidues(13, h40.connection_set));

  // p = 3, m = 9, blocks {1,2,3}, {5}.
  const CirculantSpec h31 = HpsSpec({3, 1});
  EXPECT_EQ(h31.modulus, 9);
  EXPECT_EQ(h31.connection_set, (std::vector<int>{1, 2, 3, 5}));
  EXPECT_TRUE(PartitionsNonzeroResidues(9, h31.connection_set));
}

TEST(HpsTest, RejectsOutOfRange) {
  EXPECT_THROW(Hps(2, 0), std::invalid_argument);
  EXPECT_THROW(Hps(3, -1), std::invalid_argument);
}

TEST(HpsTest, BlockStructureOverGrid) {
  for (int r = 3; r <= 8; ++r) {
    for (int s = 0; s <= 3; ++s) {
      SCOPED_TRACE("r=" + std::to_string(r) + " s=" + std::to_string(s));
      const HpsParams params{r, s};
      const int p = params.p();
      const int m = params.modulus();
      const auto blocks = HpsConnectionBlocks(params);
      ASSERT_EQ(static_cast<int>(blocks.size()), r - 1);
      std::vector<int> first(p);
      std::iota(first.begin(), first.end(), 1);
      EXPECT_EQ(blocks[0], first);
      if (r >= 4 || s >= 1) {
        ASSERT_FALSE(blocks[1].empty());
        EXPECT_EQ(blocks[1].front(), p + 2);
        EXPECT_EQ(blocks[1].back(), 2 * p - s);
      }
      EXPECT_THAT(blocks.back(), ElementsAre((r - 2) * p + r - 1));
      size_t total = 0;
      for (const auto& b : blocks) total += b.size();
      EXPECT_EQ(static_cast<int>(total), (m - 1) / 2);
      const CirculantSpec spec = HpsSpec(params);
      EXPECT_TRUE(PartitionsNonzeroResidues(m, spec.connection_set));
      EXPECT_EQ(HpsDac(r, s), (m + 1) / 2);
    }
  }
}

TEST(HpsTest, CirculantDegreesAreUniform) {
  const Digraph d = Hps(5, 2);
  const int half = (d.order() - 1) / 2;
  for (int v = 0; v < d.order(); ++v) {
    EXPECT_EQ(d.OutDegree(v), half);
    EXPECT_EQ(d.InDegree(v), half);
  }
}

TEST(CompleteSymmetricTest, Basic) {
  EXPECT_EQ(CompleteSymmetric(1).arc_count(), 0);
  const Digraph k3 = CompleteSymmetric(3);
  EXPECT_EQ(k3.arc_count(), 6);
  EXPECT_EQ(ClassifySymmetry(k3), Symmetry::kSymmetric);
  EXPECT_THROW(CompleteSymmetric(0), std::invalid_argument);
}

TEST(TransitiveTournamentTest, Basic) {
  EXPECT_EQ(TransitiveTournament(2), Digraph::Build(2, {{0, 1}}));
  EXPECT_FALSE(HasDirectedCycle(TransitiveTournament(6), VertexSet::Full(6)));
  EXPECT_THROW(TransitiveTournament(0), std::invalid_argument);
}

TEST(ClosedFormTest, DacValues) {
  EXPECT_EQ(HpsDac(3, 0), 4);
  EXPECT_EQ(HpsDac(5, 1), 17);
  EXPECT_EQ(HpsDac(9, 0), 37);
}

TEST(ClosedFormTest, Bounds) {
  EXPECT_EQ(DiachromaticBound(4), 6);
  EXPECT_EQ(DiachromaticBound(5), 10);
  EXPECT_EQ(DiachromaticBound(8), 29);
  EXPECT_THROW(DiachromaticBound(1), std::invalid_argument);
  for (int r = 2; r <= 40; ++r) {
    const int64_t general = (int64_t{r} * r - r + 2) / 2;
    EXPECT_LE(DiachromaticBound(r), general);
    EXPECT_EQ(DiachromaticBound(r) < general, r == 4 || r == 5) << r;
  }
}

}  // namespace
}  // namespace dikroma
