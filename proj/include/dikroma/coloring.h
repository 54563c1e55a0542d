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

#ifndef DIKROMA_COLORING_H_
#define DIKROMA_COLORING_H_

#include <span>
#include <vector>

#include "dikroma/digraph.h"

namespace dikroma {

// A surjective map from vertices 0..n-1 onto colors 1..k.
class Coloring {
 public:
  Coloring() = default;

  // Throws std::invalid_argument if a color is < 1 or some color in 1..max is
  // unused.
  explicit Coloring(std::vector<int> colors);

  // Same partition, colors renumbered 1, 2, ... by first occurrence in vertex
  // order.
  Coloring Canonical() const;

  int order() const { return static_cast<int>(colors_.size()); }
  int k() const { return k_; }
  int ColorOf(int v) const { return colors_.at(v); }
  std::span<const int> colors() const { return colors_; }

  // Throws std::out_of_range unless 1 <= color <= k.
  VertexSet ClassOf(int color) const;
  std::vector<VertexSet> Classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int k_ = 0;
};

// The one-class coloring of n vertices.
Coloring ConstantColoring(int n);

// No class induces a directed cycle. Throws std::invalid_argument on a size
// mismatch.
bool IsAcyclicColoring(const Digraph& d, const Coloring& c);

// Every ordered pair of distinct colors (i, j) has an arc from class i to
// class j. Vacuously true for k <= 1. Throws on a size mismatch.
bool IsCompleteColoring(const Digraph& d, const Coloring& c);

}  // namespace dikroma

#endif  // DIKROMA_COLORING_H_
