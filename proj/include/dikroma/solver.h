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

// Exact backtracking solvers for acyclic and complete acyclic colorings.
//
// Both searches assign vertices in descending total-degree order, try colors
// in increasing order and open at most one new color per vertex, so the first
// coloring found is the lexicographically smallest color string in that
// order. Class acyclicity is checked incrementally by a reachability sweep
// inside the receiving class. The complete search additionally prunes a
// partial coloring as soon as some ordered color pair can no longer receive
// an arc, or the uncovered pairs outnumber the arcs still touching
// unassigned vertices.
//
// A search can be split over worker threads by enumerating the search tree
// down to a fixed depth and handing out subtrees; the earliest subtree (in
// sequential order) holding a solution wins, so answers and witnesses do not
// depend on the thread count unless a budget runs out.
//
// All searches require order() <= kMaxSolverOrder.

#ifndef DIKROMA_SOLVER_H_
#define DIKROMA_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "dikroma/coloring.h"
#include "dikroma/digraph.h"

namespace dikroma {

inline constexpr int kMaxSolverOrder = 64;

struct SearchBudget {
  std::optional<uint64_t> max_nodes;
  std::optional<double> max_seconds;
};

struct SolverOptions {
  SearchBudget budget;
  int threads = 1;
};

enum class SearchOutcome { kFound, kNone, kUnknown };

std::string_view OutcomeName(SearchOutcome outcome);

struct SearchStats {
  uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};

  SearchStats& operator+=(const SearchStats& other) {
    nodes_explored += other.nodes_explored;
    elapsed += other.elapsed;
    return *this;
  }
};

struct ColoringSearch {
  SearchOutcome outcome = SearchOutcome::kUnknown;
  // Present iff outcome == kFound; uses exactly the requested number of colors.
  std::optional<Coloring> coloring;
  SearchStats stats;
};

// Thrown by operations whose result type has no room for an "unknown" answer.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A surjective acyclic coloring with exactly k colors.
ColoringSearch FindAcyclicColoring(const Digraph& d, int k, const SolverOptions& options = {});

// A surjective acyclic and complete coloring with exactly k colors.
ColoringSearch FindCompleteAcyclicColoring(const Digraph& d, int k, const SolverOptions& options = {});

struct SolveResult {
  // Number of colors of the witness; the optimum when exact.
  int value = 0;
  std::optional<Coloring> witness;
  // False when a budget ran out; the optimum then lies in
  // [lower_bound, upper_bound].
  bool exact = true;
  int lower_bound = 0;
  int upper_bound = 0;
  SearchStats stats;
};

// Minimum number of colors of an acyclic coloring. Ascends from a digon-clique
// lower bound.
SolveResult DichromaticNumber(const Digraph& d, const SolverOptions& options = {});

// Maximum number of colors of a complete acyclic coloring. Descends from
// DacUpperBound and decides every k on the way independently.
SolveResult DiachromaticNumber(const Digraph& d, const SolverOptions& options = {});

// Largest k with k(k-1) <= arc count, capped at the order.
int DacUpperBound(const Digraph& d);

struct SpectrumEntry {
  int colors = 0;
  SearchOutcome outcome = SearchOutcome::kUnknown;
  std::optional<Coloring> witness;
};

struct Spectrum {
  SolveResult dichromatic;
  SolveResult diachromatic;
  // One entry per l in [dc, dac], ascending.
  std::vector<SpectrumEntry> entries;
  // Values of l with no complete acyclic l-coloring; a nonempty list
  // falsifies interpolation for this digraph.
  std::vector<int> gaps;
  bool exact = true;
};

Spectrum InterpolationSpectrum(const Digraph& d, const SolverOptions& options = {});

struct CriticalityReport {
  bool critical = false;
  int dichromatic = 0;
  // Vertices whose deletion keeps the dichromatic number.
  std::vector<int> stable_vertices;
};

// Throws BudgetExhausted if any of the underlying decisions is left open.
CriticalityReport CheckVertexCriticality(const Digraph& d, const SolverOptions& options = {});
bool IsVertexCritical(const Digraph& d, const SolverOptions& options = {});

struct SingletonColoring {
  Coloring coloring;
  int vertex = 0;
};

// An optimal acyclic coloring in which {vertex} is a whole class, for the
// smallest such vertex. Such a coloring exists iff d - vertex admits an
// acyclic (dc - 1)-coloring. Throws BudgetExhausted if left open.
std::optional<SingletonColoring> SingletonOptimalColoring(const Digraph& d, const SolverOptions& options = {});

}  // namespace dikroma

#endif  // DIKROMA_SOLVER_H_
