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

#ifndef DIKROMA_CONSTRUCT_H_
#define DIKROMA_CONSTRUCT_H_

#include <string>
#include <vector>

#include "dikroma/digraph.h"

namespace dikroma {

// Path attachment: new vertices v_1..v_s are appended to `base` and tied to
// the anchor v_0 by a parity tournament, and to the rest of the base by arcs
// that copy v_0's neighborhood.
//
// With path vertex v_j stored at index base.order() + j - 1:
//  * every pair 0 <= i < j <= s gets the arc (v_j, v_i) when j - i is even
//    and (v_i, v_j) when j - i is odd;
//  * every x != v_0 with x in N-(v_0) \ N+(v_0) gets (x, v_j) for even j and
//    (v_j, x) for odd j;
//  * every x != v_0 with x in N+(v_0) gets (v_j, x) for even j and (x, v_j)
//    for odd j;
//  * vertices not adjacent to v_0 receive no new arcs.
struct PathAttachment {
  Digraph base;
  int anchor = 0;
  int path_length = 0;

  // Index of v_j in the attached digraph; v_0 is the anchor.
  int PathVertex(int j) const { return j == 0 ? anchor : base.order() + j - 1; }
};

// Throws std::out_of_range if the anchor is not a base vertex and
// std::invalid_argument if path_length < 0. path_length == 0 returns base.
Digraph AttachPath(const PathAttachment& params);

// Checks that every even path vertex v_j (j >= 2) copies the anchor's
// neighborhood on V(base) \ {v_0}: out-neighbors N+(v_0) and in-neighbors
// N-(v_0) \ N+(v_0). Returns one message per violation.
std::vector<std::string> MimicryViolations(const Digraph& attached, const PathAttachment& params);

}  // namespace dikroma

#endif  // DIKROMA_CONSTRUCT_H_
