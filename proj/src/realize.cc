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

#include "dikroma/realize.h"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

#include "dikroma/construct.h"
#include "dikroma/families.h"

namespace dikroma {
namespace {

std::string Str(int64_t v) { return std::to_string(v); }

struct ProbeItem {
  Digraph digraph;
  int order = 0;
  bool exhaustive = false;
};

struct ProbeOutcome {
  bool undecided = false;
  bool dc_hit = false;
  bool both_hit = false;
};

ProbeOutcome Examine(const Digraph& d, int r, const SolverOptions& options) {
  ProbeOutcome outcome;
  const SolveResult dc = DichromaticNumber(d, options);
  if (!dc.exact) {
    // Only a bracket containing r keeps the digraph interesting.
    outcome.undecided = dc.lower_bound <= r && r <= dc.upper_bound;
    return outcome;
  }
  if (dc.value != r) return outcome;
  outcome.dc_hit = true;
  const SolveResult dac = DiachromaticNumber(d, options);
  if (!dac.exact) {
    outcome.undecided = dac.lower_bound <= r && r <= dac.upper_bound;
    return outcome;
  }
  outcome.both_hit = dac.value == r;
  return outcome;
}

// Orientation number `code` of the complete graph on n vertices: bit b picks
// the direction of the b-th pair (i < j) in lexicographic order.
Digraph TournamentFromCode(int n, uint64_t code) {
  DigraphBuilder builder(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) {
        builder.AddArc(j, i);
      } else {
        builder.AddArc(i, j);
      }
    }
  }
  return std::move(builder).Finish();
}

}  // namespace

std::string_view StatusName(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::kProved:
      return "proved";
    case VerificationStatus::kWitnessOnly:
      return "witness-only";
    case VerificationStatus::kUnknown:
      return "unknown";
  }
  return "invalid";
}

VerificationStatus ParseStatus(std::string_view name) {
  if (name == "proved") return VerificationStatus::kProved;
  if (name == "witness-only") return VerificationStatus::kWitnessOnly;
  if (name == "unknown") return VerificationStatus::kUnknown;
  throw std::invalid_argument("unknown verification status '" + std::string(name) + "'");
}

Certificate Certify(Digraph d, int r, int t, std::string trace, const SolverOptions& options) {
  Certificate cert;
  cert.claimed_r = r;
  cert.claimed_t = t;
  cert.symmetry = ClassifySymmetry(d);
  cert.construction_trace = std::move(trace);

  ColoringSearch dc = FindAcyclicColoring(d, r, options);
  if (dc.outcome == SearchOutcome::kNone) {
    throw RealizationError("no acyclic " + Str(r) + "-coloring exists; claimed dc is wrong");
  }
  if (dc.outcome == SearchOutcome::kUnknown) throw BudgetExhausted("dc witness search ran out of budget");
  cert.dc_witness = *dc.coloring;
  cert.dc_verified = VerificationStatus::kProved;
  if (r >= 2) {
    const ColoringSearch below = FindAcyclicColoring(d, r - 1, options);
    if (below.outcome == SearchOutcome::kFound) {
      throw RealizationError("found an acyclic " + Str(r - 1) + "-coloring; dc < " + Str(r));
    }
    if (below.outcome == SearchOutcome::kUnknown) cert.dc_verified = VerificationStatus::kWitnessOnly;
  }

  ColoringSearch dac = FindCompleteAcyclicColoring(d, t, options);
  if (dac.outcome == SearchOutcome::kNone) {
    throw RealizationError("no complete acyclic " + Str(t) + "-coloring exists; claimed dac is wrong");
  }
  if (dac.outcome == SearchOutcome::kUnknown) throw BudgetExhausted("dac witness search ran out of budget");
  cert.dac_witness = *dac.coloring;
  cert.dac_verified = VerificationStatus::kProved;
  for (int k = t + 1; k <= DacUpperBound(d); ++k) {
    const ColoringSearch above = FindCompleteAcyclicColoring(d, k, options);
    if (above.outcome == SearchOutcome::kFound) {
      throw RealizationError("found a complete acyclic " + Str(k) + "-coloring; dac > " + Str(t));
    }
    if (above.outcome == SearchOutcome::kUnknown) cert.dac_verified = VerificationStatus::kWitnessOnly;
  }
  cert.digraph = std::move(d);
  return cert;
}

Digraph NonsymmetricRealizer(int r, int t, std::string* trace) {
  if (r < 1) throw std::invalid_argument("r must be >= 1, got " + Str(r));
  if (r > t) throw std::invalid_argument("need r <= t, got r = " + Str(r) + ", t = " + Str(t));
  std::string recipe;
  Digraph d;
  if (r == 1 && t > 1) {
    // A path attached to a single vertex is a parity tournament with
    // cycles, so the acyclic case uses a transitive tournament instead.
    d = TransitiveTournament(2 * t - 1);
    recipe = "transitive_tournament(" + Str(2 * t - 1) + ")";
  } else {
    const int s = t == r ? 1 : 2 * (t - r);
    d = AttachPath({CompleteSymmetric(r), 0, s});
    recipe = "complete_symmetric(" + Str(r) + "); attach_path(v0=0, s=" + Str(s) + ")";
  }
  if (trace != nullptr) *trace = recipe;
  return d;
}

Certificate RealizeNonsymmetric(int r, int t, const SolverOptions& options) {
  std::string trace;
  Digraph d = NonsymmetricRealizer(r, t, &trace);
  return Certify(std::move(d), r, t, std::move(trace), options);
}

int AsymmetricThreshold(int r) {
  if (r < 2) throw std::invalid_argument("asymmetric realization needs r >= 2, got " + Str(r));
  return (r * r - r + 2) / 2;
}

Digraph AsymmetricRealizer(int r, int t, const SolverOptions& options, std::string* trace) {
  const int threshold = AsymmetricThreshold(r);
  if (t < threshold) {
    std::string message = "asymmetric realization of r = " + Str(r) + " needs t >= " + Str(threshold) + ", got " + Str(t);
    if ((r == 4 || r == 5) && t >= DiachromaticBound(r)) {
      message += "; b(" + Str(r) + ") = " + Str(DiachromaticBound(r)) +
                 " is known but its witnessing tournament is not constructed here";
    }
    throw std::invalid_argument(message);
  }
  if (r == 2) {
    if (trace != nullptr) *trace = "full_circulant_tournament(" + Str(2 * t - 1) + ")";
    return FullCirculantTournament(2 * t - 1);
  }
  Digraph base = Hps(r, 0);
  const std::optional<SingletonColoring> singleton = SingletonOptimalColoring(base, options);
  if (!singleton) throw RealizationError("Hps(" + Str(r) + ", 0) has no optimal coloring with a singleton class");
  const int v0 = singleton->vertex == 0 ? 1 : 0;
  const int s = 2 * (t - threshold);
  if (trace != nullptr) {
    *trace = "hps(r=" + Str(r) + ", s=0); singleton class {" + Str(singleton->vertex) + "}; attach_path(v0=" + Str(v0) +
             ", s=" + Str(s) + ")";
  }
  return AttachPath({std::move(base), v0, s});
}

Certificate RealizeAsymmetric(int r, int t, const SolverOptions& options) {
  std::string trace;
  Digraph d = AsymmetricRealizer(r, t, options, &trace);
  return Certify(std::move(d), r, t, std::move(trace), options);
}

CertificateCheck VerifyCertificate(const Certificate& cert, const SolverOptions& options) {
  CertificateCheck check;
  auto fail = [&check](std::string message) { check.violations.push_back(std::move(message)); };
  const Digraph& d = cert.digraph;
  const int r = cert.claimed_r;
  const int t = cert.claimed_t;
  if (r > t) fail("claimed r exceeds claimed t");

  if (cert.dc_witness.order() != d.order()) {
    fail("dc witness covers the wrong number of vertices");
  } else {
    if (cert.dc_witness.k() != r) fail("dc witness uses " + Str(cert.dc_witness.k()) + " colors, claimed " + Str(r));
    if (!IsAcyclicColoring(d, cert.dc_witness)) fail("dc witness has a monochromatic cycle");
  }
  if (cert.dac_witness.order() != d.order()) {
    fail("dac witness covers the wrong number of vertices");
  } else {
    if (cert.dac_witness.k() != t) fail("dac witness uses " + Str(cert.dac_witness.k()) + " colors, claimed " + Str(t));
    if (!IsAcyclicColoring(d, cert.dac_witness)) fail("dac witness has a monochromatic cycle");
    if (!IsCompleteColoring(d, cert.dac_witness)) fail("dac witness is not complete");
  }
  if (ClassifySymmetry(d) != cert.symmetry) {
    fail("symmetry recorded as " + std::string(SymmetryName(cert.symmetry)) + " but digraph is " +
         std::string(SymmetryName(ClassifySymmetry(d))));
  }

  if (cert.dc_verified == VerificationStatus::kProved && r >= 2) {
    const ColoringSearch below = FindAcyclicColoring(d, r - 1, options);
    if (below.outcome == SearchOutcome::kFound) fail("an acyclic " + Str(r - 1) + "-coloring exists");
    if (below.outcome == SearchOutcome::kUnknown) fail("could not re-prove dc >= " + Str(r) + " within budget");
  }
  if (cert.dac_verified == VerificationStatus::kProved) {
    for (int k = t + 1; k <= DacUpperBound(d); ++k) {
      const ColoringSearch above = FindCompleteAcyclicColoring(d, k, options);
      if (above.outcome == SearchOutcome::kFound) fail("a complete acyclic " + Str(k) + "-coloring exists");
      if (above.outcome == SearchOutcome::kUnknown) fail("could not re-prove dac <= " + Str(t) + " within budget");
    }
  }
  check.valid = check.violations.empty();
  return check;
}

Digraph SampleAsymmetric(uint64_t seed, int order, int index) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(order),
                    static_cast<uint32_t>(index)};
  std::mt19937_64 rng(seq);
  DigraphBuilder builder(order);
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      switch ((rng() >> 32) % 3) {
        case 0:
          break;
        case 1:
          builder.AddArc(i, j);
          break;
        default:
          builder.AddArc(j, i);
      }
    }
  }
  return std::move(builder).Finish();
}

ProbeReport ConjectureProbe(const ProbeOptions& options) {
  if (options.r < 3) throw std::invalid_argument("probe needs r >= 3, got " + Str(options.r));
  if (options.samples < 0) throw std::invalid_argument("sample count must be >= 0");
  ProbeReport report;
  report.r = options.r;

  std::vector<ProbeItem> items;
  for (int n = 1; n <= std::min(options.n_max, 5); ++n) {
    const uint64_t count = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t code = 0; code < count; ++code) items.push_back({TournamentFromCode(n, code), n, true});
  }
  for (int n = 6; n <= options.n_max; ++n) {
    for (int i = 0; i < options.samples; ++i) items.push_back({SampleAsymmetric(options.seed, n, i), n, false});
  }

  SolverOptions per_item = options.solver;
  per_item.threads = 1;
  std::vector<ProbeOutcome> outcomes(items.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
      outcomes[i] = Examine(items[i].digraph, options.r, per_item);
    }
  };
  {
    const int threads = std::max(1, std::min<int>(options.solver.threads, static_cast<int>(items.size())));
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (size_t i = 0; i < items.size(); ++i) {
    if (report.census.empty() || report.census.back().order != items[i].order) {
      report.census.push_back({items[i].order, items[i].exhaustive});
    }
    ProbeCensus& row = report.census.back();
    ++row.examined;
    row.dc_equals_r += outcomes[i].dc_hit;
    row.both_equal_r += outcomes[i].both_hit;
    row.undecided += outcomes[i].undecided;
    if (outcomes[i].undecided) report.budget_exhausted = true;
    if (outcomes[i].both_hit && !report.counterexample) {
      report.counterexample = Certify(items[i].digraph, options.r, options.r,
                                      "probe order " + Str(items[i].order) + " item " + Str(static_cast<int64_t>(i)),
                                      options.solver);
    }
  }
  return report;
}

}  // namespace dikroma
