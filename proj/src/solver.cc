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

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace dikroma {
namespace {

using Clock = std::chrono::steady_clock;

// Node and wall-clock accounting shared by every search of one solve.
class BudgetTracker {
 public:
  explicit BudgetTracker(const SearchBudget& budget) : max_nodes_(budget.max_nodes) {
    if (budget.max_seconds) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*budget.max_seconds));
    }
    if (max_nodes_) flush_every_ = std::clamp<uint64_t>(*max_nodes_ / 64, 1, 1024);
  }

  uint64_t flush_every() const { return flush_every_; }

  // Adds `count` nodes; returns false once the budget is spent.
  bool Charge(uint64_t count) {
    const uint64_t total = nodes_.fetch_add(count, std::memory_order_relaxed) + count;
    if (max_nodes_ && total > *max_nodes_) exhausted_.store(true, std::memory_order_relaxed);
    if (deadline_ && Clock::now() > *deadline_) exhausted_.store(true, std::memory_order_relaxed);
    return !exhausted();
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  std::optional<uint64_t> max_nodes_;
  std::optional<Clock::time_point> deadline_;
  uint64_t flush_every_ = 1024;
  std::atomic<uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

uint64_t Bit(int p) { return uint64_t{1} << p; }

// Mask of positions >= from.
uint64_t SuffixMask(int n, int from) {
  if (from >= n) return 0;
  const uint64_t all = n == 64 ? ~uint64_t{0} : Bit(n) - 1;
  return all & ~(from == 0 ? 0 : Bit(from) - 1);
}

struct State {
  std::array<uint64_t, kMaxSolverOrder> cls{};
  // Union of out-neighborhoods of each class.
  std::array<uint64_t, kMaxSolverOrder> reach{};
  std::array<int8_t, kMaxSolverOrder> color{};
  int used = 0;
};

enum class Step { kFound, kNone, kAborted };

// Per-worker view: budget batching and cancellation of subtrees that can no
// longer win.
struct WorkerContext {
  BudgetTracker* budget;
  const std::atomic<size_t>* best = nullptr;
  size_t subtree = 0;
  uint64_t pending = 0;

  bool Tick() {
    if (++pending >= budget->flush_every()) {
      const uint64_t count = pending;
      pending = 0;
      if (!budget->Charge(count)) return false;
    } else if (budget->exhausted()) {
      return false;
    }
    return best == nullptr || best->load(std::memory_order_relaxed) >= subtree;
  }

  void Flush() {
    if (pending > 0) budget->Charge(pending);
    pending = 0;
  }
};

// The colouring problem rewritten in assignment-position space: position p
// holds vertex order[p], and all masks are over positions.
class ColoringProblem {
 public:
  ColoringProblem(const Digraph& d, int k, bool complete) : n_(d.order()), k_(k), complete_(complete) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&d](int a, int b) {
      return d.OutDegree(a) + d.InDegree(a) > d.OutDegree(b) + d.InDegree(b);
    });
    std::vector<int> position(n_);
    for (int p = 0; p < n_; ++p) position[order_[p]] = p;
    out_.assign(n_, 0);
    in_.assign(n_, 0);
    for (const Arc& a : d.Arcs()) {
      out_[position[a.tail]] |= Bit(position[a.head]);
      in_[position[a.head]] |= Bit(position[a.tail]);
    }
    suffix_out_.assign(n_ + 1, 0);
    arcs_touching_suffix_.assign(n_ + 1, 0);
    int inside_prefix = 0;
    std::vector<int> prefix_arcs(n_ + 1, 0);
    for (int p = 0; p < n_; ++p) {
      inside_prefix += __builtin_popcountll(out_[p] & (Bit(p) - 1)) + __builtin_popcountll(in_[p] & (Bit(p) - 1));
      prefix_arcs[p + 1] = inside_prefix;
    }
    for (int p = n_ - 1; p >= 0; --p) suffix_out_[p] = suffix_out_[p + 1] | out_[p];
    for (int p = 0; p <= n_; ++p) arcs_touching_suffix_[p] = d.arc_count() - prefix_arcs[p];
  }

  int order() const { return n_; }

  // Depth-first search from `state` with positions < depth assigned. On
  // kFound the state holds the solution.
  Step Search(State& state, int depth, WorkerContext& ctx) const {
    if (!ctx.Tick()) return Step::kAborted;
    if (depth == n_) return IsSolution(state) ? Step::kFound : Step::kNone;
    const int limit = std::min(state.used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (!Place(state, depth, c)) continue;
      if (Feasible(state, depth + 1)) {
        const Step step = Search(state, depth + 1, ctx);
        if (step == Step::kFound) return step;
        if (step == Step::kAborted) {
          Unplace(state, depth, c);
          return step;
        }
      }
      Unplace(state, depth, c);
    }
    return Step::kNone;
  }

  // Collects every feasible state with exactly `depth` positions assigned.
  Step Enumerate(State& state, int assigned, int depth, WorkerContext& ctx, std::vector<State>& out) const {
    if (!ctx.Tick()) return Step::kAborted;
    if (assigned == depth) {
      out.push_back(state);
      return Step::kNone;
    }
    const int limit = std::min(state.used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (!Place(state, assigned, c)) continue;
      Step step = Step::kNone;
      if (Feasible(state, assigned + 1)) step = Enumerate(state, assigned + 1, depth, ctx, out);
      Unplace(state, assigned, c);
      if (step == Step::kAborted) return step;
    }
    return Step::kNone;
  }

  Coloring Extract(const State& state) const {
    std::vector<int> colors(n_);
    for (int p = 0; p < n_; ++p) colors[order_[p]] = state.color[p] + 1;
    return Coloring(std::move(colors)).Canonical();
  }

 private:
  // Assigns color c to position p if the class stays acyclic.
  bool Place(State& state, int p, int c) const {
    const uint64_t cls = state.cls[c];
    uint64_t seen = out_[p] & cls;
    const uint64_t targets = in_[p] & cls;
    if (seen != 0 && targets != 0) {
      uint64_t frontier = seen;
      while (frontier != 0) {
        if ((seen & targets) != 0) return false;
        uint64_t next = 0;
        for (uint64_t bits = frontier; bits != 0; bits &= bits - 1) next |= out_[__builtin_ctzll(bits)];
        next &= cls & ~seen;
        seen |= next;
        frontier = next;
      }
      if ((seen & targets) != 0) return false;
    }
    state.cls[c] |= Bit(p);
    state.reach[c] |= out_[p];
    state.color[p] = static_cast<int8_t>(c);
    if (c == state.used) ++state.used;
    return true;
  }

  void Unplace(State& state, int p, int c) const {
    state.cls[c] &= ~Bit(p);
    if (state.cls[c] == 0) {
      state.reach[c] = 0;
      --state.used;
      return;
    }
    uint64_t reach = 0;
    for (uint64_t bits = state.cls[c]; bits != 0; bits &= bits - 1) reach |= out_[__builtin_ctzll(bits)];
    state.reach[c] = reach;
  }

  bool Feasible(const State& state, int next) const {
    if (state.used + (n_ - next) < k_) return false;
    if (!complete_) return true;
    const uint64_t open = SuffixMask(n_, next);
    const uint64_t open_out = suffix_out_[next];
    int covered = 0;
    for (int i = 0; i < state.used; ++i) {
      for (int j = 0; j < state.used; ++j) {
        if (i == j) continue;
        if ((state.reach[i] & state.cls[j]) != 0) {
          ++covered;
        } else if ((state.reach[i] & open) == 0 && (open_out & (state.cls[j] | open)) == 0) {
          return false;
        }
      }
    }
    return k_ * (k_ - 1) - covered <= arcs_touching_suffix_[next];
  }

  bool IsSolution(const State& state) const {
    if (state.used != k_) return false;
    if (!complete_) return true;
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) {
        if (i != j && (state.reach[i] & state.cls[j]) == 0) return false;
      }
    }
    return true;
  }

  int n_;
  int k_;
  bool complete_;
  std::vector<int> order_;
  std::vector<uint64_t> out_;
  std::vector<uint64_t> in_;
  std::vector<uint64_t> suffix_out_;
  std::vector<int> arcs_touching_suffix_;
};

void CheckSolverOrder(const Digraph& d) {
  if (d.order() > kMaxSolverOrder) {
    throw std::invalid_argument("solvers support at most " + std::to_string(kMaxSolverOrder) +
                                " vertices, got " + std::to_string(d.order()));
  }
}

void CheckWitness(const Digraph& d, const Coloring& c, int k, bool complete) {
  if (c.k() != k || !IsAcyclicColoring(d, c) || (complete && !IsCompleteColoring(d, c))) {
    throw std::logic_error("solver produced an invalid witness for k = " + std::to_string(k));
  }
}

// Splits the tree at the shallowest depth giving enough subtrees per worker.
ColoringSearch RunParallel(const ColoringProblem& problem, int threads, BudgetTracker& budget) {
  ColoringSearch result;
  std::vector<State> prefixes;
  int depth = 1;
  for (;; ++depth) {
    prefixes.clear();
    State root;
    WorkerContext ctx{&budget};
    const Step step = problem.Enumerate(root, 0, depth, ctx, prefixes);
    ctx.Flush();
    if (step == Step::kAborted) {
      result.outcome = SearchOutcome::kUnknown;
      return result;
    }
    if (static_cast<int>(prefixes.size()) >= 8 * threads || depth >= problem.order()) break;
  }
  if (prefixes.empty()) {
    result.outcome = SearchOutcome::kNone;
    return result;
  }

  std::atomic<size_t> next{0};
  std::atomic<size_t> best{std::numeric_limits<size_t>::max()};
  std::vector<Step> steps(prefixes.size(), Step::kAborted);
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
      if (i > best.load()) continue;
      WorkerContext ctx{&budget, &best, i};
      steps[i] = problem.Search(prefixes[i], depth, ctx);
      ctx.Flush();
      if (steps[i] == Step::kFound) {
        size_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < std::min<int>(threads, prefixes.size()); ++t) pool.emplace_back(worker);
  }
  const size_t winner = best.load();
  if (winner != std::numeric_limits<size_t>::max()) {
    result.outcome = SearchOutcome::kFound;
    result.coloring = problem.Extract(prefixes[winner]);
    return result;
  }
  const bool aborted = std::any_of(steps.begin(), steps.end(), [](Step s) { return s == Step::kAborted; });
  result.outcome = aborted ? SearchOutcome::kUnknown : SearchOutcome::kNone;
  return result;
}

ColoringSearch RunSearch(const Digraph& d, int k, bool complete, int threads, BudgetTracker& budget) {
  CheckSolverOrder(d);
  const auto start = Clock::now();
  const uint64_t nodes_before = budget.nodes();
  ColoringSearch result;
  const int n = d.order();
  if (k < 0 || k > n || (k == 0) != (n == 0)) {
    result.outcome = SearchOutcome::kNone;
  } else if (n == 0) {
    result.outcome = SearchOutcome::kFound;
    result.coloring = Coloring();
  } else if (budget.exhausted()) {
    result.outcome = SearchOutcome::kUnknown;
  } else {
    const ColoringProblem problem(d, k, complete);
    if (threads > 1 && n > 1) {
      result = RunParallel(problem, threads, budget);
    } else {
      State root;
      WorkerContext ctx{&budget};
      const Step step = problem.Search(root, 0, ctx);
      ctx.Flush();
      if (step == Step::kFound) {
        result.outcome = SearchOutcome::kFound;
        result.coloring = problem.Extract(root);
      } else {
        result.outcome = step == Step::kNone ? SearchOutcome::kNone : SearchOutcome::kUnknown;
      }
    }
  }
  if (result.coloring) CheckWitness(d, *result.coloring, k, complete);
  result.stats.nodes_explored = budget.nodes() - nodes_before;
  result.stats.elapsed = Clock::now() - start;
  return result;
}

// Size of a greedily grown set of vertices pairwise joined by digons.
int DigonCliqueBound(const Digraph& d) {
  int best = d.order() > 0 ? 1 : 0;
  for (int seed = 0; seed < d.order(); ++seed) {
    VertexSet candidates = d.OutNeighbors(seed) & d.InNeighbors(seed);
    int size = 1;
    while (!candidates.Empty()) {
      const int v = candidates.ToVector().front();
      candidates &= d.OutNeighbors(v) & d.InNeighbors(v);
      ++size;
    }
    best = std::max(best, size);
  }
  return best;
}

ColoringSearch CheckOutcome(const BudgetTracker& budget, ColoringSearch search) {
  if (search.outcome == SearchOutcome::kUnknown && !budget.exhausted()) {
    throw std::logic_error("search reported unknown without exhausting its budget");
  }
  return search;
}

}  // namespace

std::string_view OutcomeName(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kFound:
      return "found";
    case SearchOutcome::kNone:
      return "none";
    case SearchOutcome::kUnknown:
      return "unknown";
  }
  return "invalid";
}

ColoringSearch FindAcyclicColoring(const Digraph& d, int k, const SolverOptions& options) {
  BudgetTracker budget(options.budget);
  return CheckOutcome(budget, RunSearch(d, k, /*complete=*/false, options.threads, budget));
}

ColoringSearch FindCompleteAcyclicColoring(const Digraph& d, int k, const SolverOptions& options) {
  BudgetTracker budget(options.budget);
  return CheckOutcome(budget, RunSearch(d, k, /*complete=*/true, options.threads, budget));
}

int DacUpperBound(const Digraph& d) {
  int k = 0;
  while (k < d.order() && (k + 1) * k <= d.arc_count()) ++k;
  return k;
}

SolveResult DichromaticNumber(const Digraph& d, const SolverOptions& options) {
  CheckSolverOrder(d);
  SolveResult result;
  const int n = d.order();
  if (n == 0) {
    result.witness = Coloring();
    return result;
  }
  BudgetTracker budget(options.budget);
  const int start = std::max(DigonCliqueBound(d), HasDirectedCycle(d, VertexSet::Full(n)) ? 2 : 1);
  std::optional<int> first_open;
  for (int k = start; k <= n; ++k) {
    ColoringSearch search = RunSearch(d, k, /*complete=*/false, options.threads, budget);
    result.stats += search.stats;
    if (search.outcome == SearchOutcome::kFound) {
      result.value = k;
      result.witness = std::move(search.coloring);
      result.exact = !first_open;
      result.lower_bound = first_open.value_or(k);
      result.upper_bound = k;
      return result;
    }
    if (search.outcome == SearchOutcome::kUnknown && !first_open) first_open = k;
  }
  // Only reachable when the budget ran out: singletons are always acyclic.
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 1);
  result.value = n;
  result.witness = Coloring(std::move(identity));
  result.exact = false;
  result.lower_bound = first_open.value_or(start);
  result.upper_bound = n;
  return result;
}

SolveResult DiachromaticNumber(const Digraph& d, const SolverOptions& options) {
  CheckSolverOrder(d);
  SolveResult result;
  if (d.order() == 0) {
    result.witness = Coloring();
    return result;
  }
  BudgetTracker budget(options.budget);
  std::optional<int> highest_open;
  for (int k = DacUpperBound(d); k >= 1; --k) {
    ColoringSearch search = RunSearch(d, k, /*complete=*/true, options.threads, budget);
    result.stats += search.stats;
    if (search.outcome == SearchOutcome::kFound) {
      result.value = k;
      result.witness = std::move(search.coloring);
      result.exact = !highest_open;
      result.lower_bound = k;
      result.upper_bound = highest_open.value_or(k);
      return result;
    }
    if (search.outcome == SearchOutcome::kUnknown && !highest_open) highest_open = k;
  }
  if (!highest_open) throw std::logic_error("no complete acyclic coloring found for a nonempty digraph");
  result.exact = false;
  result.lower_bound = 1;
  result.upper_bound = *highest_open;
  return result;
}

Spectrum InterpolationSpectrum(const Digraph& d, const SolverOptions& options) {
  Spectrum spectrum;
  spectrum.dichromatic = DichromaticNumber(d, options);
  spectrum.diachromatic = DiachromaticNumber(d, options);
  spectrum.exact = spectrum.dichromatic.exact && spectrum.diachromatic.exact;
  if (!spectrum.exact) return spectrum;
  for (int l = spectrum.dichromatic.value; l <= spectrum.diachromatic.value; ++l) {
    ColoringSearch search = FindCompleteAcyclicColoring(d, l, options);
    SpectrumEntry entry{l, search.outcome, std::move(search.coloring)};
    if (entry.outcome == SearchOutcome::kNone) spectrum.gaps.push_back(l);
    if (entry.outcome == SearchOutcome::kUnknown) spectrum.exact = false;
    spectrum.entries.push_back(std::move(entry));
  }
  return spectrum;
}

CriticalityReport CheckVertexCriticality(const Digraph& d, const SolverOptions& options) {
  const SolveResult dc = DichromaticNumber(d, options);
  if (!dc.exact) throw BudgetExhausted("dichromatic number undecided within budget");
  CriticalityReport report;
  report.dichromatic = dc.value;
  for (int v = 0; v < d.order(); ++v) {
    const Digraph rest = DeleteVertex(d, v);
    const ColoringSearch search = FindAcyclicColoring(rest, dc.value - 1, options);
    if (search.outcome == SearchOutcome::kUnknown) {
      throw BudgetExhausted("criticality of vertex " + std::to_string(v) + " undecided within budget");
    }
    if (search.outcome == SearchOutcome::kNone) report.stable_vertices.push_back(v);
  }
  report.critical = report.stable_vertices.empty();
  return report;
}

bool IsVertexCritical(const Digraph& d, const SolverOptions& options) {
  return CheckVertexCriticality(d, options).critical;
}

std::optional<SingletonColoring> SingletonOptimalColoring(const Digraph& d, const SolverOptions& options) {
  const SolveResult dc = DichromaticNumber(d, options);
  if (!dc.exact) throw BudgetExhausted("dichromatic number undecided within budget");
  for (int u = 0; u < d.order(); ++u) {
    const ColoringSearch search = FindAcyclicColoring(DeleteVertex(d, u), dc.value - 1, options);
    if (search.outcome == SearchOutcome::kUnknown) {
      throw BudgetExhausted("singleton class at vertex " + std::to_string(u) + " undecided within budget");
    }
    if (search.outcome != SearchOutcome::kFound) continue;
    std::vector<int> colors;
    colors.reserve(d.order());
    for (int v = 0; v < d.order(); ++v) {
      if (v == u) {
        colors.push_back(dc.value);
      } else {
        colors.push_back(search.coloring->ColorOf(v < u ? v : v - 1));
      }
    }
    SingletonColoring result{Coloring(std::move(colors)), u};
    CheckWitness(d, result.coloring, dc.value, /*complete=*/false);
    return result;
  }
  return std::nullopt;
}

}  // namespace dikroma
