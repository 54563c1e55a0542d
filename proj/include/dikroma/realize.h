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

#ifndef DIKROMA_REALIZE_H_
#define DIKROMA_REALIZE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dikroma/coloring.h"
#include "dikroma/digraph.h"
#include "dikroma/solver.h"

namespace dikroma {

enum class VerificationStatus {
  kProved,       // witness found and every larger (smaller) count refuted
  kWitnessOnly,  // witness found, negative side left open by the budget
  kUnknown,      // no witness
};

std::string_view StatusName(VerificationStatus status);
VerificationStatus ParseStatus(std::string_view name);

// A digraph with claimed dichromatic number r and diachromatic number t,
// together with the evidence for both claims.
struct Certificate {
  Digraph digraph;
  int claimed_r = 0;
  int claimed_t = 0;
  Coloring dc_witness;
  Coloring dac_witness;
  VerificationStatus dc_verified = VerificationStatus::kUnknown;
  VerificationStatus dac_verified = VerificationStatus::kUnknown;
  Symmetry symmetry = Symmetry::kSymmetric;
  std::string construction_trace;
};

// Thrown when a realization's claims fail to verify.
class RealizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Searches witnesses for (r, t) on d and runs the negative checks.
Certificate Certify(Digraph d, int r, int t, std::string trace, const SolverOptions& options = {});

// A non-symmetric digraph with dc = r and dac = t, for 1 <= r <= t.
// r >= 2: path of length 2(t - r) attached to the complete symmetric digraph
// on r vertices (length 1 when t == r). r == 1: a single arc when t == 1,
// otherwise the transitive tournament of order 2t - 1.
Digraph NonsymmetricRealizer(int r, int t, std::string* trace = nullptr);
Certificate RealizeNonsymmetric(int r, int t, const SolverOptions& options = {});

// The smallest t for which RealizeAsymmetric accepts r.
int AsymmetricThreshold(int r);

// An asymmetric digraph with dc = r and dac = t, for r >= 2 and
// t >= (r^2 - r + 2) / 2. r == 2 uses the full circulant tournament of order
// 2t - 1; r >= 3 attaches a path of even length to the critical circulant
// tournament Hps(r, 0) at the smallest vertex outside a singleton class of an
// optimal coloring.
Digraph AsymmetricRealizer(int r, int t, const SolverOptions& options = {}, std::string* trace = nullptr);
Certificate RealizeAsymmetric(int r, int t, const SolverOptions& options = {});

struct CertificateCheck {
  bool valid = false;
  std::vector<std::string> violations;
};

// Re-checks witnesses, the symmetry class, and (for proved statuses) the
// negative solver calls.
CertificateCheck VerifyCertificate(const Certificate& cert, const SolverOptions& options = {});

struct ProbeOptions {
  int r = 3;
  int n_max = 5;
  // Random asymmetric digraphs drawn per order above the exhaustive range.
  int samples = 100;
  uint64_t seed = 1;
  SolverOptions solver;
};

struct ProbeCensus {
  int order = 0;
  bool exhaustive = false;
  int64_t examined = 0;
  int64_t dc_equals_r = 0;
  int64_t both_equal_r = 0;
  int64_t undecided = 0;
};

struct ProbeReport {
  int r = 0;
  std::vector<ProbeCensus> census;
  bool budget_exhausted = false;
  std::optional<Certificate> counterexample;
};

// Looks for asymmetric digraphs with dc = dac = r: all tournaments of order
// <= min(5, n_max), then `samples` random asymmetric digraphs for each order
// 6..n_max. Evidence only.
ProbeReport ConjectureProbe(const ProbeOptions& options);

// The random asymmetric digraph drawn for (seed, order, index): each vertex
// pair independently gets no arc or one of the two orientations.
Digraph SampleAsymmetric(uint64_t seed, int order, int index);

}  // namespace dikroma

#endif  // DIKROMA_REALIZE_H_
