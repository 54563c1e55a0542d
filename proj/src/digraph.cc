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

#include "dikroma/digraph.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dikroma {
namespace {

size_t WordCount(int universe) { return (static_cast<size_t>(universe) + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(WordCount(universe), 0) {
  if (universe < 0) throw std::invalid_argument("negative vertex-set universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) Insert(v);
}

VertexSet VertexSet::Full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.Insert(v);
  return s;
}

VertexSet VertexSet::FromVector(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) s.Insert(v);
  return s;
}

void VertexSet::CheckMember(int v) const {
  if (v < 0 || v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(universe_ - 1));
  }
}

void VertexSet::CheckSameUniverse(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("vertex sets over different universes");
  }
}

bool VertexSet::Contains(int v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::Insert(int v) {
  CheckMember(v);
  words_[v / 64] |= uint64_t{1} << (v % 64);
}

void VertexSet::Erase(int v) {
  CheckMember(v);
  words_[v / 64] &= ~(uint64_t{1} << (v % 64));
}

int VertexSet::Count() const {
  int count = 0;
  for (uint64_t w : words_) count += __builtin_popcountll(w);
  return count;
}

bool VertexSet::Empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::Intersects(const VertexSet& other) const {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<int> VertexSet::ToVector() const {
  std::vector<int> out;
  ForEach([&out](int v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::string_view SymmetryName(Symmetry symmetry) {
  switch (symmetry) {
    case Symmetry::kSymmetric:
      return "symmetric";
    case Symmetry::kAsymmetric:
      return "asymmetric";
    case Symmetry::kMixed:
      return "mixed";
  }
  return "unknown";
}

DigraphBuilder::DigraphBuilder(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  out_.assign(n, VertexSet(n));
  labels_.resize(n);
  std::iota(labels_.begin(), labels_.end(), 0);
}

DigraphBuilder& DigraphBuilder::AddArc(int tail, int head) {
  if (tail < 0 || tail >= n_ || head < 0 || head >= n_) {
    throw std::invalid_argument("arc (" + std::to_string(tail) + "," + std::to_string(head) +
                                ") has an endpoint outside 0.." + std::to_string(n_ - 1));
  }
  if (tail == head) {
    throw std::invalid_argument("loop arc at vertex " + std::to_string(tail));
  }
  out_[tail].Insert(head);
  return *this;
}

DigraphBuilder& DigraphBuilder::SetLabels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != n_) {
    throw std::invalid_argument("label map size differs from vertex count");
  }
  labels_ = std::move(labels);
  return *this;
}

Digraph DigraphBuilder::Finish() && {
  Digraph d;
  d.n_ = n_;
  d.in_.assign(n_, VertexSet(n_));
  for (int u = 0; u < n_; ++u) {
    out_[u].ForEach([&](int v) {
      d.in_[v].Insert(u);
      ++d.arc_count_;
    });
  }
  d.out_ = std::move(out_);
  d.labels_ = std::move(labels_);
  return d;
}

Digraph Digraph::Build(int n, std::span<const Arc> arcs) {
  DigraphBuilder builder(n);
  for (const Arc& a : arcs) builder.AddArc(a.tail, a.head);
  return std::move(builder).Finish();
}

void Digraph::CheckVertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
  }
}

bool Digraph::HasArc(int tail, int head) const {
  if (tail < 0 || tail >= n_) return false;
  return out_[tail].Contains(head);
}

const VertexSet& Digraph::OutNeighbors(int v) const {
  CheckVertex(v);
  return out_[v];
}

const VertexSet& Digraph::InNeighbors(int v) const {
  CheckVertex(v);
  return in_[v];
}

std::vector<Arc> Digraph::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(arc_count_);
  for (int u = 0; u < n_; ++u) {
    out_[u].ForEach([&](int v) { arcs.push_back({u, v}); });
  }
  return arcs;
}

Symmetry ClassifySymmetry(const Digraph& d) {
  bool any_digon = false;
  bool any_single = false;
  for (const Arc& a : d.Arcs()) {
    if (d.HasArc(a.head, a.tail)) {
      any_digon = true;
    } else {
      any_single = true;
    }
  }
  // An arcless digraph counts as symmetric.
  if (!any_single) return Symmetry::kSymmetric;
  return any_digon ? Symmetry::kMixed : Symmetry::kAsymmetric;
}

std::vector<Arc> ArcsBetween(const Digraph& d, const VertexSet& from, const VertexSet& to) {
  std::vector<Arc> arcs;
  from.ForEach([&](int x) {
    (d.OutNeighbors(x) & to).ForEach([&](int y) { arcs.push_back({x, y}); });
  });
  return arcs;
}

bool HasDirectedCycle(const Digraph& d, const VertexSet& subset) {
  // Peel vertices without out-neighbors inside the remaining set; a cycle
  // survives iff peeling gets stuck.
  VertexSet remaining = subset;
  bool progress = true;
  while (progress && !remaining.Empty()) {
    progress = false;
    for (int v : remaining.ToVector()) {
      if (!d.OutNeighbors(v).Intersects(remaining)) {
        remaining.Erase(v);
        progress = true;
      }
    }
  }
  return !remaining.Empty();
}

Digraph InducedSubdigraph(const Digraph& d, const VertexSet& subset) {
  const std::vector<int> keep = subset.ToVector();
  std::vector<int> new_index(d.order(), -1);
  for (size_t i = 0; i < keep.size(); ++i) new_index[keep[i]] = static_cast<int>(i);
  DigraphBuilder builder(static_cast<int>(keep.size()));
  std::vector<int> labels;
  labels.reserve(keep.size());
  for (int u : keep) {
    labels.push_back(d.labels()[u]);
    (d.OutNeighbors(u) & subset).ForEach([&](int v) {
      builder.AddArc(new_index[u], new_index[v]);
    });
  }
  builder.SetLabels(std::move(labels));
  return std::move(builder).Finish();
}

Digraph DeleteVertex(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) {
    throw std::out_of_range("cannot delete vertex " + std::to_string(v) + " from a digraph of order " +
                            std::to_string(d.order()));
  }
  VertexSet keep = VertexSet::Full(d.order());
  keep.Erase(v);
  return InducedSubdigraph(d, keep);
}

TournamentProperties GetTournamentProperties(const Digraph& d) {
  const int n = d.order();
  TournamentProperties props;
  props.is_tournament = true;
  for (int u = 0; u < n && props.is_tournament; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (d.HasArc(u, v) == d.HasArc(v, u)) {
        props.is_tournament = false;
        break;
      }
    }
  }
  if (!props.is_tournament) return props;
  props.is_regular = n % 2 == 1 || n == 0;
  for (int v = 0; v < n && props.is_regular; ++v) {
    props.is_regular = 2 * d.OutDegree(v) == n - 1;
  }
  return props;
}

}  // namespace dikroma
