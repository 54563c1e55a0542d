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

// Edge-list text format and JSON encodings.
//
// Edge list: the first non-comment line is "n m", followed by exactly m lines
// "u v" with 0-indexed endpoints. Lines starting with '#' are comments.

#ifndef DIKROMA_IO_H_
#define DIKROMA_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dikroma/coloring.h"
#include "dikroma/digraph.h"
#include "dikroma/realize.h"
#include "dikroma/solver.h"

namespace dikroma {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ParseError on a malformed header or arc line, an arc count
// mismatch, an out-of-range endpoint or a loop.
Digraph ParseEdgeList(std::string_view text);
Digraph ReadEdgeListFile(const std::filesystem::path& path);

// Arcs in lexicographic order, LF line endings.
std::string FormatEdgeList(const Digraph& d);

nlohmann::json DigraphToJson(const Digraph& d);
Digraph DigraphFromJson(const nlohmann::json& j);

nlohmann::json ColoringToJson(const Coloring& c);
Coloring ColoringFromJson(const nlohmann::json& j);

nlohmann::json SolveResultToJson(const SolveResult& result);

nlohmann::json CertificateToJson(const Certificate& cert);
Certificate CertificateFromJson(const nlohmann::json& j);

std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace dikroma

#endif  // DIKROMA_IO_H_
