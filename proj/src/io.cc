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

#include "dikroma/io.h"

#include <fstream>
#include <sstream>
#include <vector>

namespace dikroma {
namespace {

using nlohmann::json;

// Splits a line into whitespace-separated integers; false on any other token.
bool ParseInts(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != token.size()) return false;
    out.push_back(value);
  }
  return true;
}

Symmetry ParseSymmetry(const std::string& name) {
  if (name == "symmetric") return Symmetry::kSymmetric;
  if (name == "asymmetric") return Symmetry::kAsymmetric;
  if (name == "mixed") return Symmetry::kMixed;
  throw ParseError("unknown symmetry class '" + name + "'");
}

}  // namespace

Digraph ParseEdgeList(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') lines.emplace_back(line_no, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing 'n m' header");

  std::vector<long long> ints;
  if (!ParseInts(lines[0].second, ints) || ints.size() != 2 || ints[0] < 0 || ints[1] < 0) {
    throw ParseError("line " + std::to_string(lines[0].first) + ": malformed header, expected 'n m'");
  }
  const long long n = ints[0];
  const long long m = ints[1];
  if (n > 1'000'000) throw ParseError("vertex count " + std::to_string(n) + " is too large");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " arcs but " + std::to_string(lines.size() - 1) +
                     " arc lines follow");
  }
  DigraphBuilder builder(static_cast<int>(n));
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    if (!ParseInts(line, ints) || ints.size() != 2) {
      throw ParseError("line " + std::to_string(no) + ": expected 'u v'");
    }
    if (ints[0] < 0 || ints[0] >= n || ints[1] < 0 || ints[1] >= n) {
      throw ParseError("line " + std::to_string(no) + ": endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (ints[0] == ints[1]) throw ParseError("line " + std::to_string(no) + ": loop arc");
    builder.AddArc(static_cast<int>(ints[0]), static_cast<int>(ints[1]));
  }
  Digraph d = std::move(builder).Finish();
  if (d.arc_count() != m) throw ParseError("duplicate arcs: " + std::to_string(m) + " lines, " +
                                           std::to_string(d.arc_count()) + " distinct arcs");
  return d;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Digraph ReadEdgeListFile(const std::filesystem::path& path) { return ParseEdgeList(ReadTextFile(path)); }

std::string FormatEdgeList(const Digraph& d) {
  std::string out = std::to_string(d.order()) + " " + std::to_string(d.arc_count()) + "\n";
  for (const Arc& a : d.Arcs()) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

json DigraphToJson(const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.Arcs()) arcs.push_back({a.tail, a.head});
  return {{"n", d.order()}, {"arcs", std::move(arcs)}};
}

Digraph DigraphFromJson(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw ParseError("arc entries must be [u, v] pairs");
      arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    return Digraph::Build(n, arcs);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad digraph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad digraph JSON: ") + e.what());
  }
}

json ColoringToJson(const Coloring& c) {
  return {{"k", c.k()}, {"colors", std::vector<int>(c.colors().begin(), c.colors().end())}};
}

Coloring ColoringFromJson(const json& j) {
  try {
    Coloring c(j.at("colors").get<std::vector<int>>());
    if (c.k() != j.at("k").get<int>()) throw ParseError("coloring 'k' disagrees with its colors");
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad coloring JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad coloring JSON: ") + e.what());
  }
}

json SolveResultToJson(const SolveResult& result) {
  json j = {{"value", result.value},
            {"exact", result.exact},
            {"lower_bound", result.lower_bound},
            {"upper_bound", result.upper_bound},
            {"witness", result.witness ? ColoringToJson(*result.witness) : json(nullptr)},
            {"stats",
             {{"nodes_explored", result.stats.nodes_explored},
              {"elapsed_ms", std::chrono::duration<double, std::milli>(result.stats.elapsed).count()}}}};
  return j;
}

json CertificateToJson(const Certificate& cert) {
  return {{"digraph", DigraphToJson(cert.digraph)},
          {"claimed_r", cert.claimed_r},
          {"claimed_t", cert.claimed_t},
          {"dc_witness", ColoringToJson(cert.dc_witness)},
          {"dac_witness", ColoringToJson(cert.dac_witness)},
          {"dc_verified", StatusName(cert.dc_verified)},
          {"dac_verified", StatusName(cert.dac_verified)},
          {"symmetry", SymmetryName(cert.symmetry)},
          {"construction_trace", cert.construction_trace}};
}

Certificate CertificateFromJson(const json& j) {
  try {
    Certificate cert;
    cert.digraph = DigraphFromJson(j.at("digraph"));
    cert.claimed_r = j.at("claimed_r").get<int>();
    cert.claimed_t = j.at("claimed_t").get<int>();
    cert.dc_witness = ColoringFromJson(j.at("dc_witness"));
    cert.dac_witness = ColoringFromJson(j.at("dac_witness"));
    cert.dc_verified = ParseStatus(j.at("dc_verified").get<std::string>());
    cert.dac_verified = ParseStatus(j.at("dac_verified").get<std::string>());
    cert.symmetry = ParseSymmetry(j.at("symmetry").get<std::string>());
    cert.construction_trace = j.at("construction_trace").get<std::string>();
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  }
}

}  // namespace dikroma
