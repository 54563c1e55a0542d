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

#include <stdexcept>
#include <string>

namespace dikroma {

void ValidateCirculantSpec(const CirculantSpec& spec) {
  const int m = spec.modulus;
  if (m < 1) throw std::invalid_argument("circulant modulus must be >= 1, got " + std::to_string(m));
  std::vector<bool> member(m, false);
  for (int w : spec.connection_set) {
    if (w == 0) throw std::invalid_argument("connection set contains 0");
    if (w < 0 || w >= m) {
      throw std::invalid_argument("connection residue " + std::to_string(w) + " outside 1.." +
                                  std::to_string(m - 1));
    }
    member[w] = true;
  }
  for (int w = 1; w < m; ++w) {
    if (member[w] == member[m - w]) {
      throw std::invalid_argument("connection set violates antisymmetry at residue " +
                                  std::to_string(w) + " (mod " + std::to_string(m) + ")");
    }
  }
}

Digraph Circulant(const CirculantSpec& spec) {
  ValidateCirculantSpec(spec);
  const int m = spec.modulus;
  DigraphBuilder builder(m);
  for (int i = 0; i < m; ++i) {
    for (int w : spec.connection_set) builder.AddArc(i, (i + w) % m);
  }
  return std::move(builder).Finish();
}

Digraph FullCirculantTournament(int m) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("full circulant tournament needs odd m >= 3, got " + std::to_string(m));
  }
  CirculantSpec spec{m, {}};
  for (int w = 1; w <= (m - 1) / 2; ++w) spec.connection_set.push_back(w);
  return Circulant(spec);
}

std::vector<std::vector<int>> HpsConnectionBlocks(const HpsParams& params) {
  if (params.r < 3) throw std::invalid_argument("H family needs r >= 3, got " + std::to_string(params.r));
  if (params.s < 0) throw std::invalid_argument("H family needs s >= 0, got " + std::to_string(params.s));
  const int p = params.p();
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i <= params.r - 2; ++i) {
    std::vector<int> block;
    for (int w = i * p + i + 1; w <= (i + 1) * p - i * params.s; ++w) block.push_back(w);
    if (static_cast<int>(block.size()) != p - i * (params.s + 1)) {
      throw std::logic_error("H family block " + std::to_string(i) + " has the wrong size");
    }
    blocks.push_back(std::move(block));
  }
  const int last = (params.r - 2) * p + params.r - 1;
  if (blocks.back() != std::vector<int>{last}) {
    throw std::logic_error("H family final block is not {" + std::to_string(last) + "}");
  }
  return blocks;
}

CirculantSpec HpsSpec(const HpsParams& params) {
  CirculantSpec spec{params.modulus(), {}};
  for (const auto& block : HpsConnectionBlocks(params)) {
    spec.connection_set.insert(spec.connection_set.end(), block.begin(), block.end());
  }
  if (2 * static_cast<int>(spec.connection_set.size()) != spec.modulus - 1) {
    throw std::logic_error("H family connection set has the wrong cardinality");
  }
  try {
    ValidateCirculantSpec(spec);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("H family connection set is inconsistent: ") + e.what());
  }
  return spec;
}

Digraph Hps(int r, int s) { return Circulant(HpsSpec({r, s})); }

Digraph CompleteSymmetric(int n) {
  if (n < 1) throw std::invalid_argument("complete symmetric digraph needs n >= 1");
  DigraphBuilder builder(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) builder.AddArc(u, v);
    }
  }
  return std::move(builder).Finish();
}

Digraph TransitiveTournament(int n) {
  if (n < 1) throw std::invalid_argument("transitive tournament needs n >= 1");
  DigraphBuilder builder(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) builder.AddArc(u, v);
  }
  return std::move(builder).Finish();
}

int64_t HpsDac(int r, int s) {
  if (r < 3 || s < 0) throw std::invalid_argument("closed form needs r >= 3 and s >= 0");
  const int64_t rr = r;
  return ((rr * rr - 3 * rr + 2) * s + (rr * rr - rr + 2)) / 2;
}

int64_t DiachromaticBound(int r) {
  if (r < 2) throw std::invalid_argument("b(r) needs r >= 2, got " + std::to_string(r));
  if (r == 4) return 6;
  if (r == 5) return 10;
  const int64_t rr = r;
  return (rr * rr - rr + 2) / 2;
}

}  // namespace dikroma
