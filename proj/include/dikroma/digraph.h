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

#ifndef DIKROMA_DIGRAPH_H_
#define DIKROMA_DIGRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace dikroma {

// An ordered vertex pair (tail, head).
struct Arc {
  int tail = 0;
  int head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A subset of {0, ..., universe-1} stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  static VertexSet Full(int universe);
  static VertexSet FromVector(int universe, std::span<const int> members);

  int universe() const { return universe_; }
  bool Contains(int v) const;
  void Insert(int v);
  void Erase(int v);
  int Count() const;
  bool Empty() const;
  bool Intersects(const VertexSet& other) const;
  std::vector<int> ToVector() const;

  // Calls fn(v) for each member in increasing order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<int>(w * 64) + bit);
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  // Set difference.
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Lowest 64 members as a mask; only meaningful when universe() <= 64.
  uint64_t LowWord() const { return words_.empty() ? 0 : words_[0]; }

 private:
  void CheckMember(int v) const;
  void CheckSameUniverse(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

enum class Symmetry { kSymmetric, kAsymmetric, kMixed };

std::string_view SymmetryName(Symmetry symmetry);

struct TournamentProperties {
  bool is_tournament = false;
  bool is_regular = false;
};

// Immutable finite digraph on vertices 0..n-1 without loops or parallel arcs.
// Digons (both (u,v) and (v,u)) are allowed. Each vertex carries a label, the
// index it had in the digraph it was derived from (identity by default).
class Digraph {
 public:
  // The empty digraph (n = 0).
  Digraph() = default;

  // Throws std::invalid_argument on an out-of-range endpoint or a loop.
  // Duplicate pairs are collapsed.
  static Digraph Build(int n, std::span<const Arc> arcs);
  static Digraph Build(int n, std::initializer_list<Arc> arcs) {
    return Build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }

  bool HasArc(int tail, int head) const;
  const VertexSet& OutNeighbors(int v) const;
  const VertexSet& InNeighbors(int v) const;
  int OutDegree(int v) const { return OutNeighbors(v).Count(); }
  int InDegree(int v) const { return InNeighbors(v).Count(); }

  // All arcs sorted lexicographically by (tail, head).
  std::vector<Arc> Arcs() const;

  const std::vector<int>& labels() const { return labels_; }

  // Equality compares vertex count and arc sets; labels are ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  friend class DigraphBuilder;
  void CheckVertex(int v) const;

  int n_ = 0;
  int arc_count_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<int> labels_;
};

// Mutable accumulator of arcs; Finish() freezes it into a Digraph.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(int n);

  int order() const { return n_; }
  // Throws std::invalid_argument on an out-of-range endpoint or a loop.
  DigraphBuilder& AddArc(int tail, int head);
  DigraphBuilder& SetLabels(std::vector<int> labels);
  Digraph Finish() &&;

 private:
  int n_;
  std::vector<VertexSet> out_;
  std::vector<int> labels_;
};

Symmetry ClassifySymmetry(const Digraph& d);

// Arcs (x, y) of d with x in from and y in to.
std::vector<Arc> ArcsBetween(const Digraph& d, const VertexSet& from,
                             const VertexSet& to);

// True iff the subdigraph induced by subset contains a directed cycle. A digon
// is a cycle of length 2.
bool HasDirectedCycle(const Digraph& d, const VertexSet& subset);

// Removes v and relabels the remaining vertices contiguously, preserving
// their original labels.
Digraph DeleteVertex(const Digraph& d, int v);

// Subdigraph induced by subset, relabeled contiguously in increasing order.
Digraph InducedSubdigraph(const Digraph& d, const VertexSet& subset);

TournamentProperties GetTournamentProperties(const Digraph& d);

}  // namespace dikroma

#endif  // DIKROMA_DIGRAPH_H_
