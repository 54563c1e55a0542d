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

// Generators for the digraph families used throughout the library, and the
// closed-form diachromatic values and bounds that go with them.

#ifndef DIKROMA_FAMILIES_H_
#define DIKROMA_FAMILIES_H_

#include <cstdint>
#include <vector>

#include "dikroma/digraph.h"

namespace dikroma {

// Circulant digraph C_m(J): vertex i has an arc to j iff (j - i) mod m is in
// the connection set J.
struct CirculantSpec {
  int modulus = 1;
  std::vector<int> connection_set;
};

// Throws std::invalid_argument unless every residue w in 1..m-1 satisfies
// w in J <=> m - w not in J. The message names the offending residue.
void ValidateCirculantSpec(const CirculantSpec& spec);

Digraph Circulant(const CirculantSpec& spec);

// C_m(1, ..., (m-1)/2) for odd m >= 3.
Digraph FullCirculantTournament(int m);

// Parameters of the vertex-critical r-dichromatic circulant tournament
// family, indexed by the target dichromatic number r >= 3 and stretch s >= 0.
struct HpsParams {
  int r = 3;
  int s = 0;

  int p() const { return (r - 2) * (s + 1) + 1; }
  int modulus() const { return (r - 1) * (p() + 1) + 1; }
};

// The connection set as its r-1 consecutive blocks. Block i is
// {i*p + i + 1, ..., (i+1)*p - i*s}.
std::vector<std::vector<int>> HpsConnectionBlocks(const HpsParams& params);
CirculantSpec HpsSpec(const HpsParams& params);
Digraph Hps(int r, int s);

// All n(n-1) ordered pairs; n >= 1.
Digraph CompleteSymmetric(int n);

// Arcs (i, j) for all i < j; n >= 1.
Digraph TransitiveTournament(int n);

// Closed-form diachromatic number of Hps(r, s).
int64_t HpsDac(int r, int s);

// Tabulated upper bound b(r) on the diachromatic number in terms of the
// dichromatic number r >= 2. The r = 4 and r = 5 entries are constants; the
// tournaments witnessing them are not generated here.
int64_t DiachromaticBound(int r);

}  // namespace dikroma

#endif  // DIKROMA_FAMILIES_H_
