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

#include "dikroma/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dikroma/construct.h"
#include "dikroma/families.h"
#include "dikroma/io.h"
#include "dikroma/realize.h"
#include "dikroma/solver.h"
#include "dikroma/tables.h"

namespace dikroma::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string format = "json";
  int threads = 0;
  std::optional<uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  std::string in;
  std::string out;

  // gen
  std::string family;
  int m = 0;
  std::vector<int> connection_set;
  int r = 0;
  int s = 0;
  int n = 0;
  // extend
  int v0 = 0;
  int path_len = 0;
  // verify
  std::string cert;
  std::string coloring;
  bool complete = false;
  // realize
  int t = 0;
  bool asymmetric = false;
  // probe
  int n_max = 5;
  int samples = 100;
  uint64_t seed = 1;
  // tables
  int table = 1;
  int r_max = 0;
  int s_max = 5;
};

// Raised for inputs that parse but violate a command's contract.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int DefaultThreads() {
  if (const char* env = std::getenv("DIKROMA_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  bool json_mode() const { return config_.format == "json"; }

  SolverOptions Solver() const {
    SolverOptions options;
    options.threads = config_.threads > 0 ? config_.threads : DefaultThreads();
    options.budget.max_nodes = config_.budget_nodes;
    options.budget.max_seconds = config_.budget_seconds;
    return options;
  }

  Digraph Input() const {
    if (config_.in.empty()) throw UsageError("--in is required");
    return ReadEdgeListFile(config_.in);
  }

  // Writes to --out when given, otherwise to the output stream.
  void Emit(const std::string& text) const {
    if (config_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(config_.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + config_.out);
    file << text;
  }

  void EmitJson(const json& j) const { Emit(j.dump() + "\n"); }

  int Gen() const {
    Digraph d;
    const std::string& f = config_.family;
    if (f == "circulant") {
      d = Circulant({config_.m, config_.connection_set});
    } else if (f == "full-circulant") {
      d = FullCirculantTournament(config_.m);
    } else if (f == "hps") {
      d = Hps(config_.r, config_.s);
    } else if (f == "complete-symmetric") {
      d = CompleteSymmetric(config_.n);
    } else if (f == "transitive") {
      d = TransitiveTournament(config_.n);
    } else {
      throw UsageError("unknown family '" + f + "'");
    }
    Emit(FormatEdgeList(d));
    return kExitOk;
  }

  int Extend() const {
    Emit(FormatEdgeList(AttachPath({Input(), config_.v0, config_.path_len})));
    return kExitOk;
  }

  int Solve(bool diachromatic) const {
    const Digraph d = Input();
    const SolveResult result = diachromatic ? DiachromaticNumber(d, Solver()) : DichromaticNumber(d, Solver());
    if (json_mode()) {
      EmitJson(SolveResultToJson(result));
    } else {
      std::string text = std::string(diachromatic ? "dac" : "dc") + " = " + std::to_string(result.value);
      if (!result.exact) {
        text += " (unknown: budget exhausted, bracket [" + std::to_string(result.lower_bound) + ", " +
                std::to_string(result.upper_bound) + "])";
      }
      text += "\n";
      if (result.witness) text += "witness " + ColoringToJson(*result.witness).dump() + "\n";
      Emit(text);
    }
    return result.exact ? kExitOk : kExitUnknown;
  }

  int SpectrumCommand() const {
    const Spectrum spectrum = InterpolationSpectrum(Input(), Solver());
    json entries = json::array();
    for (const SpectrumEntry& e : spectrum.entries) {
      entries.push_back({{"l", e.colors},
                         {"outcome", OutcomeName(e.outcome)},
                         {"coloring", e.witness ? ColoringToJson(*e.witness) : json(nullptr)}});
    }
    const json j = {{"dc", SolveResultToJson(spectrum.dichromatic)},
                    {"dac", SolveResultToJson(spectrum.diachromatic)},
                    {"entries", entries},
                    {"gaps", spectrum.gaps},
                    {"exact", spectrum.exact}};
    if (json_mode()) {
      EmitJson(j);
    } else {
      std::string text = "dc = " + std::to_string(spectrum.dichromatic.value) +
                         ", dac = " + std::to_string(spectrum.diachromatic.value) + "\n";
      for (const SpectrumEntry& e : spectrum.entries) {
        text += "l = " + std::to_string(e.colors) + ": " + std::string(OutcomeName(e.outcome)) + "\n";
      }
      if (!spectrum.gaps.empty()) text += "GAP: interpolation fails\n";
      Emit(text);
    }
    if (!spectrum.exact) return kExitUnknown;
    return spectrum.gaps.empty() ? kExitOk : kExitRejected;
  }

  int Critical() const {
    const CriticalityReport report = CheckVertexCriticality(Input(), Solver());
    if (json_mode()) {
      EmitJson({{"critical", report.critical}, {"dc", report.dichromatic}, {"stable_vertices", report.stable_vertices}});
    } else {
      Emit(std::string(report.critical ? "vertex-critical" : "not vertex-critical") + ", dc = " +
           std::to_string(report.dichromatic) + "\n");
    }
    return kExitOk;
  }

  int Verify() const {
    json j;
    bool valid = false;
    if (!config_.cert.empty()) {
      const Certificate cert = CertificateFromJson(json::parse(ReadTextFile(config_.cert)));
      const CertificateCheck check = VerifyCertificate(cert, Solver());
      valid = check.valid;
      j = {{"valid", check.valid}, {"violations", check.violations}};
    } else {
      if (config_.coloring.empty()) throw UsageError("verify needs --cert, or --in with --coloring");
      const Digraph d = Input();
      const Coloring c = ColoringFromJson(json::parse(ReadTextFile(config_.coloring)));
      const bool acyclic = IsAcyclicColoring(d, c);
      const bool complete = IsCompleteColoring(d, c);
      valid = acyclic && (!config_.complete || complete);
      j = {{"valid", valid}, {"k", c.k()}, {"acyclic", acyclic}, {"complete", complete}};
    }
    if (json_mode()) {
      EmitJson(j);
    } else {
      Emit(std::string(valid ? "valid" : "INVALID") + "\n");
    }
    return valid ? kExitOk : kExitRejected;
  }

  int Realize() const {
    const Certificate cert = config_.asymmetric ? RealizeAsymmetric(config_.r, config_.t, Solver())
                                                : RealizeNonsymmetric(config_.r, config_.t, Solver());
    EmitJson(CertificateToJson(cert));
    const bool proved =
        cert.dc_verified == VerificationStatus::kProved && cert.dac_verified == VerificationStatus::kProved;
    return proved ? kExitOk : kExitUnknown;
  }

  int Probe() const {
    ProbeOptions options;
    options.r = config_.r;
    options.n_max = config_.n_max;
    options.samples = config_.samples;
    options.seed = config_.seed;
    options.solver = Solver();
    const ProbeReport report = ConjectureProbe(options);
    json census = json::array();
    for (const ProbeCensus& row : report.census) {
      census.push_back({{"order", row.order},
                        {"exhaustive", row.exhaustive},
                        {"examined", row.examined},
                        {"dc_equals_r", row.dc_equals_r},
                        {"both_equal_r", row.both_equal_r},
                        {"undecided", row.undecided}});
    }
    const json j = {{"r", report.r},
                    {"seed", config_.seed},
                    {"census", census},
                    {"budget_exhausted", report.budget_exhausted},
                    {"counterexample", report.counterexample ? CertificateToJson(*report.counterexample) : json(nullptr)}};
    if (json_mode()) {
      EmitJson(j);
    } else {
      std::string text;
      for (const ProbeCensus& row : report.census) {
        text += "n = " + std::to_string(row.order) + (row.exhaustive ? " (all tournaments)" : " (sampled)") +
                ": examined " + std::to_string(row.examined) + ", dc = r: " + std::to_string(row.dc_equals_r) +
                ", dc = dac = r: " + std::to_string(row.both_equal_r) + ", undecided: " +
                std::to_string(row.undecided) + "\n";
      }
      text += report.counterexample ? "counterexample found\n" : "none found\n";
      Emit(text);
    }
    return report.budget_exhausted ? kExitUnknown : kExitOk;
  }

  int Tables() const {
    TableFormat format = TableFormat::kText;
    if (config_.format == "json") format = TableFormat::kJson;
    if (config_.format == "csv") format = TableFormat::kCsv;
    if (config_.table == 1) {
      Emit(FormatDacTable(DacTable(config_.r_max > 0 ? config_.r_max : 9, config_.s_max), format));
    } else if (config_.table == 2) {
      Emit(FormatBoundTable(BoundTable(config_.r_max > 0 ? config_.r_max : 10), format));
    } else {
      throw UsageError("--table must be 1 or 2");
    }
    return kExitOk;
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

void WriteError(std::ostream& err, std::string_view kind, std::string_view message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact acyclic and complete-acyclic digraph colorings", "dikroma"};
  app.require_subcommand(1);
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Solver threads (default: DIKROMA_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto add_budget = [&config](CLI::App* sub) {
    sub->add_option("--budget-nodes", config.budget_nodes, "Search-node limit");
    sub->add_option("--budget-seconds", config.budget_seconds, "Wall-clock limit in seconds");
  };
  auto add_io = [&config](CLI::App* sub, bool input) {
    if (input) sub->add_option("--in", config.in, "Edge-list input file")->required();
    sub->add_option("--out", config.out, "Output file (default: stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a family member as an edge list");
  gen->add_option("family", config.family, "circulant | full-circulant | hps | complete-symmetric | transitive")
      ->required();
  gen->add_option("--m", config.m, "Modulus / order");
  gen->add_option("--j", config.connection_set, "Connection set (comma separated)")->delimiter(',');
  gen->add_option("--r", config.r, "Target dichromatic number (hps)");
  gen->add_option("--s", config.s, "Stretch parameter (hps)");
  gen->add_option("--n", config.n, "Order");
  add_io(gen, false);

  CLI::App* extend = app.add_subcommand("extend", "Attach a path at an anchor vertex");
  add_io(extend, true);
  extend->add_option("--v0", config.v0, "Anchor vertex")->required();
  extend->add_option("--path-len", config.path_len, "Number of path vertices")->required();

  CLI::App* dc = app.add_subcommand("dc", "Dichromatic number with witness");
  CLI::App* dac = app.add_subcommand("dac", "Diachromatic number with witness");
  CLI::App* spectrum = app.add_subcommand("spectrum", "Complete acyclic colorings for every l in [dc, dac]");
  CLI::App* critical = app.add_subcommand("critical", "Vertex-criticality check");
  for (CLI::App* sub : {dc, dac, spectrum, critical}) {
    add_io(sub, true);
    add_budget(sub);
  }

  CLI::App* verify = app.add_subcommand("verify", "Verify a certificate or a coloring");
  verify->add_option("--cert", config.cert, "Certificate JSON");
  verify->add_option("--in", config.in, "Edge-list input file");
  verify->add_option("--coloring", config.coloring, "Coloring JSON {\"k\": .., \"colors\": [..]}");
  verify->add_flag("--complete", config.complete, "Also require completeness");
  add_budget(verify);

  CLI::App* realize = app.add_subcommand("realize", "Certified digraph with prescribed (dc, dac)");
  realize->add_option("--r", config.r, "Dichromatic number")->required();
  realize->add_option("--t", config.t, "Diachromatic number")->required();
  realize->add_flag("--asymmetric", config.asymmetric, "Require an asymmetric digraph");
  add_io(realize, false);
  add_budget(realize);

  CLI::App* probe = app.add_subcommand("probe", "Search for asymmetric digraphs with dc = dac = r");
  probe->add_option("--r", config.r, "Target value (>= 3)")->required();
  probe->add_option("--n-max", config.n_max, "Largest order searched")->capture_default_str();
  probe->add_option("--samples", config.samples, "Random digraphs per order above 5")->capture_default_str();
  probe->add_option("--seed", config.seed, "Sampling seed")->capture_default_str();
  add_io(probe, false);
  add_budget(probe);

  CLI::App* tables = app.add_subcommand("tables", "Closed-form dac table (1) or b(r) bounds (2)");
  tables->add_option("--table", config.table, "1 or 2")->capture_default_str();
  tables->add_option("--r-max", config.r_max, "Largest r (default 9 / 10)");
  tables->add_option("--s-max", config.s_max, "Largest s for table 1")->capture_default_str();
  add_io(tables, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    WriteError(err, "usage", e.what());
    return kExitUsage;
  }

  const Session session(config, out);
  try {
    if (gen->parsed()) return session.Gen();
    if (extend->parsed()) return session.Extend();
    if (dc->parsed()) return session.Solve(false);
    if (dac->parsed()) return session.Solve(true);
    if (spectrum->parsed()) return session.SpectrumCommand();
    if (critical->parsed()) return session.Critical();
    if (verify->parsed()) return session.Verify();
    if (realize->parsed()) return session.Realize();
    if (probe->parsed()) return session.Probe();
    if (tables->parsed()) return session.Tables();
  } catch (const UsageError& e) {
    WriteError(err, "usage", e.what());
    return kExitUsage;
  } catch (const BudgetExhausted& e) {
    WriteError(err, "budget_exhausted", e.what());
    return kExitUnknown;
  } catch (const ParseError& e) {
    WriteError(err, "parse", e.what());
    return kExitError;
  } catch (const json::exception& e) {
    WriteError(err, "parse", e.what());
    return kExitError;
  } catch (const RealizationError& e) {
    WriteError(err, "realization", e.what());
    return kExitError;
  } catch (const std::invalid_argument& e) {
    WriteError(err, "precondition", e.what());
    return kExitError;
  } catch (const std::out_of_range& e) {
    WriteError(err, "precondition", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    WriteError(err, "internal", e.what());
    return kExitError;
  }
  WriteError(err, "usage", "no subcommand");
  return kExitUsage;
}

}  // namespace dikroma::cli
