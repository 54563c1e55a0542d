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

#include "dikroma/construct.h"

#include <numeric>
#include <stdexcept>

namespace dikroma {
namespace {

void Validate(const PathAttachment& params) {
  if (params.anchor < 0 || params.anchor >= params.base.order()) {
    throw std::out_of_range("anchor " + std::to_string(params.anchor) + " is not a vertex of the base (order " +
                            std::to_string(params.base.order()) + ")");
  }
  if (params.path_length < 0) {
    throw std::invalid_argument("path length must be >= 0, got " + std::to_string(params.path_length));
  }
}

}  // namespace

Digraph AttachPath(const PathAttachment& params) {
  Validate(params);
  const Digraph& base = params.base;
  const int s = params.path_length;
  if (s == 0) return base;

  const int n = base.order() + s;
  DigraphBuilder builder(n);
  std::vector<int> labels = base.labels();
  for (int j = 1; j <= s; ++j) labels.push_back(base.order() + j - 1);
  builder.SetLabels(std::move(labels));

  for (const Arc& a : base.Arcs()) builder.AddArc(a.tail, a.head);

  for (int i = 0; i <= s; ++i) {
    for (int j = i + 1; j <= s; ++j) {
      if ((j - i) % 2 == 0) {
        builder.AddArc(params.PathVertex(j), params.PathVertex(i));
      } else {
        builder.AddArc(params.PathVertex(i), params.PathVertex(j));
      }
    }
  }

  const int v0 = params.anchor;
  const VertexSet& out0 = base.OutNeighbors(v0);
  const VertexSet in_only = base.InNeighbors(v0) - out0;
  for (int x = 0; x < base.order(); ++x) {
    if (x == v0) continue;
    const bool follows_out = out0.Contains(x);
    if (!follows_out && !in_only.Contains(x)) continue;
    for (int j = 1; j <= s; ++j) {
      const int v = params.PathVertex(j);
      // Even path vertices mimic v_0; odd ones reverse it.
      const bool x_to_v = follows_out ? (j % 2 == 1) : (j % 2 == 0);
      if (x_to_v) {
        builder.AddArc(x, v);
      } else {
        builder.AddArc(v, x);
      }
    }
  }
  return std::move(builder).Finish();
}

std::vector<std::string> MimicryViolations(const Digraph& attached, const PathAttachment& params) {
  Validate(params);
  std::vector<std::string> violations;
  const Digraph& base = params.base;
  const int v0 = params.anchor;
  if (attached.order() != base.order() + params.path_length) {
    violations.push_back("attached digraph has order " + std::to_string(attached.order()) + ", expected " +
                         std::to_string(base.order() + params.path_length));
    return violations;
  }
  const VertexSet& out0 = base.OutNeighbors(v0);
  const VertexSet in_only = base.InNeighbors(v0) - out0;
  for (int j = 2; j <= params.path_length; j += 2) {
    const int v = params.PathVertex(j);
    for (int x = 0; x < base.order(); ++x) {
      if (x == v0) continue;
      const bool want_out = out0.Contains(x);
      const bool want_in = in_only.Contains(x);
      if (attached.HasArc(v, x) != want_out) {
        violations.push_back("v" + std::to_string(j) + (want_out ? " lacks" : " has unexpected") +
                             " out-neighbor " + std::to_string(x));
      }
      if (attached.HasArc(x, v) != want_in) {
        violations.push_back("v" + std::to_string(j) + (want_in ? " lacks" : " has unexpected") +
                             " in-neighbor " + std::to_string(x));
      }
    }
  }
  return violations;
}

}  // namespace dikroma
