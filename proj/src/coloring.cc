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

#include "dikroma/coloring.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dikroma {
namespace {

void CheckSizes(const Digraph& d, const Coloring& c) {
  if (d.order() != c.order()) {
    throw std::invalid_argument("coloring covers " + std::to_string(c.order()) + " vertices but the digraph has " +
                                std::to_string(d.order()));
  }
}

}  // namespace

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_) {
    if (c < 1) throw std::invalid_argument("colors are 1-based, got " + std::to_string(c));
    k_ = std::max(k_, c);
  }
  std::vector<bool> used(k_ + 1, false);
  for (int c : colors_) used[c] = true;
  for (int c = 1; c <= k_; ++c) {
    if (!used[c]) throw std::invalid_argument("color " + std::to_string(c) + " has an empty class");
  }
}

Coloring Coloring::Canonical() const {
  std::vector<int> relabel(k_ + 1, 0);
  int next = 0;
  std::vector<int> out;
  out.reserve(colors_.size());
  for (int c : colors_) {
    if (relabel[c] == 0) relabel[c] = ++next;
    out.push_back(relabel[c]);
  }
  return Coloring(std::move(out));
}

VertexSet Coloring::ClassOf(int color) const {
  if (color < 1 || color > k_) {
    throw std::out_of_range("color " + std::to_string(color) + " outside 1.." + std::to_string(k_));
  }
  VertexSet cls(order());
  for (int v = 0; v < order(); ++v) {
    if (colors_[v] == color) cls.Insert(v);
  }
  return cls;
}

std::vector<VertexSet> Coloring::Classes() const {
  std::vector<VertexSet> classes(k_, VertexSet(order()));
  for (int v = 0; v < order(); ++v) classes[colors_[v] - 1].Insert(v);
  return classes;
}

Coloring ConstantColoring(int n) { return Coloring(std::vector<int>(n, 1)); }

bool IsAcyclicColoring(const Digraph& d, const Coloring& c) {
  CheckSizes(d, c);
  for (const VertexSet& cls : c.Classes()) {
    if (HasDirectedCycle(d, cls)) return false;
  }
  return true;
}

bool IsCompleteColoring(const Digraph& d, const Coloring& c) {
  CheckSizes(d, c);
  const int k = c.k();
  // reach[i] = union of out-neighborhoods of class i.
  std::vector<VertexSet> reach(k, VertexSet(d.order()));
  for (int v = 0; v < d.order(); ++v) reach[c.ColorOf(v) - 1] |= d.OutNeighbors(v);
  const std::vector<VertexSet> classes = c.Classes();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && !reach[i].Intersects(classes[j])) return false;
    }
  }
  return true;
}

}  // namespace dikroma
