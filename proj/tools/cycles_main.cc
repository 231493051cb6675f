// Copyright 2026 The Cycles Authors
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

// Command-line front end: solve, analyze, family, verify, search, serve.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cycles/error.h"
#include "cycles/families.h"
#include "cycles/game.h"
#include "cycles/json_io.h"
#include "cycles/search.h"
#include "cycles/service.h"
#include "cycles/solver.h"
#include "cycles/strategies.h"
#include "cycles/verify.h"

namespace {

using cycles::CyclesError;
using cycles::Json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadSource(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InputFlags {
  std::string graph;
  std::string position = "-";
};

void AddInputFlags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--graph", in.graph, "Graph JSON file ('-' for stdin)");
  cmd->add_option("--position", in.position, "Position JSON file ('-' for stdin)")
      ->capture_default_str();
}

cycles::Position LoadPosition(const InputFlags& in) {
  if (!in.graph.empty()) {
    return cycles::Position::Empty(cycles::GraphFromJson(cycles::ParseJson(ReadSource(in.graph))));
  }
  return cycles::PositionFromJson(cycles::ParseJson(ReadSource(in.position)));
}

struct FamilyFlags {
  std::optional<int64_t> n, k, a, b, pendants, length, size, closed;
  bool special = false;
  bool trimmed = false;
  std::string legs, at;
};

void AddFamilyFlags(CLI::App* cmd, FamilyFlags& f, uint64_t& seed) {
  cmd->add_option("--n", f.n, "Size parameter");
  cmd->add_option("--k", f.k, "Number of blades or boxes");
  cmd->add_option("--a", f.a, "First cycle length");
  cmd->add_option("--b", f.b, "Second cycle length");
  cmd->add_option("--pendants", f.pendants, "Loose ends of a lollipop");
  cmd->add_option("--length", f.length, "Length of each loose end");
  cmd->add_option("--size", f.size, "Tree size");
  cmd->add_option("--closed", f.closed, "Closed wings (butterfly: 0/1, windmill: count)");
  cmd->add_flag("--special", f.special, "Make the shared vertex special");
  cmd->add_flag("--trimmed", f.trimmed, "Emit the trimmed form");
  cmd->add_option("--legs", f.legs, "Spider leg lengths, e.g. 2,2,4");
  cmd->add_option("--at", f.at, "Lollipop attachment positions, e.g. 1,3");
  cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
}

cycles::FamilySpec SpecFromFlags(const std::string& name, const FamilyFlags& f, uint64_t seed) {
  std::map<std::string, std::string> p;
  auto put = [&](const char* key, const std::optional<int64_t>& v) {
    if (v) p[key] = std::to_string(*v);
  };
  put("n", f.n);
  put("k", f.k);
  put("a", f.a);
  put("b", f.b);
  put("pendants", f.pendants);
  put("length", f.length);
  put("size", f.size);
  put("closed", f.closed);
  if (f.special) p["special"] = "true";
  if (f.trimmed) p["trimmed"] = "true";
  if (!f.legs.empty()) p["legs"] = f.legs;
  if (!f.at.empty()) p["at"] = f.at;
  p["seed"] = std::to_string(seed);
  return cycles::FamilySpecFromParams(name, p);
}

int PrintChecks(const std::vector<cycles::CheckResult>& checks, bool json) {
  bool all = true;
  Json out = Json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    if (json) {
      out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail},
                     {"seconds", c.seconds}});
    } else {
      std::printf("%s  %-40s %s (%.2fs)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                  c.detail.c_str(), c.seconds);
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return all ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game of Cycles solver and analysis toolkit", "cycles"};
  app.require_subcommand(1);
  bool json = false;
  uint64_t budget = 0;
  int jobs = 1;
  int threshold = 4;
  uint64_t seed = 0;
  app.add_flag("--json", json, "Machine-readable output");

  // solve
  InputFlags solve_in;
  bool want_grundy = false;
  bool want_winner = false;
  CLI::App* solve = app.add_subcommand("solve", "Grundy value and winner of a position");
  AddInputFlags(solve, solve_in);
  auto* g_flag = solve->add_flag("--grundy", want_grundy, "Print only the Grundy value");
  solve->add_flag("--winner", want_winner, "Print only the winner")->excludes(g_flag);
  solve->add_option("--budget-nodes", budget, "Node budget, 0 for unlimited");
  solve->add_flag("--json", json, "Machine-readable output");

  // analyze
  InputFlags analyze_in;
  CLI::App* analyze = app.add_subcommand("analyze", "Per-move report of a position");
  AddInputFlags(analyze, analyze_in);
  analyze->add_option("--budget-nodes", budget, "Node budget, 0 for unlimited");
  analyze->add_flag("--json", json, "Machine-readable output");

  // family
  std::string family_name;
  FamilyFlags family_flags;
  bool list_families = false;
  CLI::App* family = app.add_subcommand("family", "Emit a family member as graph JSON");
  family->add_option("name", family_name, "Family name");
  family->add_flag("--list", list_families, "List the available families");
  AddFamilyFlags(family, family_flags, seed);
  family->add_flag("--json", json, "Machine-readable output");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Check known values and strategies");
  verify->require_subcommand(1);
  verify->add_flag("--json", json, "Machine-readable output");
  InputFlags copycat_in;
  CLI::App* v_copycat = verify->add_subcommand("copycat", "Certify a copycat strategy");
  AddInputFlags(v_copycat, copycat_in);
  std::optional<int> tree_n;
  CLI::App* v_tree = verify->add_subcommand("branching-tree", "Branching trees solve to size mod 2");
  v_tree->add_option("--n", tree_n, "Maximum tree size (default 11)");
  v_tree->add_option("--jobs", jobs, "Worker threads");
  std::optional<int> ngon_n;
  CLI::App* v_ngon = verify->add_subcommand("ngon-special", "n-gon with a special vertex");
  v_ngon->add_option("--n", ngon_n, "Single n (default 3..10)");
  InputFlags decomp_in;
  CLI::App* v_decomp = verify->add_subcommand("decomposition", "Sum decomposition XOR rule");
  v_decomp->add_option("--graph", decomp_in.graph, "Graph JSON file (default: wedges of cycles)");
  std::optional<int> spider_n;
  CLI::App* v_spiders =
      verify->add_subcommand("mathews-spiders", "Three-legged even spiders solve to 0");
  v_spiders->add_option("--n", spider_n, "Maximum leg length (default 4)");
  CLI::App* v_golden = verify->add_subcommand("golden-suite", "Recorded Grundy values");
  for (CLI::App* sub : verify->get_subcommands({})) sub->add_flag("--json", json, "Machine-readable output");

  // search
  std::string search_family;
  int from = 3;
  int to = 8;
  std::optional<int> trees;
  std::string corpus_file;
  std::string checkpoint;
  std::string out_file;
  size_t max_graphs = 0;
  CLI::App* search = app.add_subcommand("search", "Scan a corpus for flagged graphs");
  search->add_option("--family", search_family, "Family to scan over --from..--to");
  search->add_option("--from", from, "First parameter value")->capture_default_str();
  search->add_option("--to", to, "Last parameter value")->capture_default_str();
  search->add_option("--trees", trees, "Scan all trees up to this size");
  search->add_option("--corpus", corpus_file, "Graph-JSON corpus file");
  search->add_option("--threshold", threshold, "High-Grundy threshold")->capture_default_str();
  search->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  search->add_option("--budget-nodes", budget, "Per-graph node budget, 0 for unlimited");
  search->add_option("--checkpoint", checkpoint, "Checkpoint file for resumable scans");
  search->add_option("--max-graphs", max_graphs, "Stop after this many graphs");
  search->add_option("--out", out_file, "Write per-graph records as JSON lines");
  search->add_flag("--json", json, "Machine-readable output");

  // serve
  int port = 8080;
  std::string host = "127.0.0.1";
  CLI::App* serve = app.add_subcommand("serve", "Start the HTTP analysis service");
  serve->add_option("--port", port, "Port")->capture_default_str();
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--budget-nodes", budget, "Per-request node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    CLI::App* failing = &app;
    for (CLI::App* sub : app.get_subcommands()) {
      failing = sub;
      for (CLI::App* nested : sub->get_subcommands()) failing = nested;
    }
    std::cerr << failing->help("", CLI::AppFormatMode::Normal);
    return kExitUsage;
  }

  try {
    cycles::SolverOptions solver_options;
    solver_options.node_budget = budget;

    if (*solve) {
      cycles::Position p = LoadPosition(solve_in);
      cycles::Solver solver(p.board_ptr(), solver_options);
      int g = solver.Grundy(p.word());
      const char* winner = g != 0 ? "first" : "second";
      if (json) {
        std::cout << Json{{"grundy", g}, {"winner", winner}, {"nodes", solver.nodes()}}.dump()
                  << "\n";
      } else if (want_grundy) {
        std::cout << g << "\n";
      } else if (want_winner) {
        std::cout << winner << "\n";
      } else {
        std::cout << "grundy " << g << "\nwinner " << winner << "\n";
      }
      return 0;
    }

    if (*analyze) {
      cycles::Position p = LoadPosition(analyze_in);
      cycles::AnalysisReport r = cycles::Analyze(p, solver_options);
      if (json) {
        std::cout << cycles::ReportToJson(p.graph(), r).dump(2) << "\n";
        return 0;
      }
      std::printf("grundy %d, %s player wins (%llu nodes, %lld ms)\n", r.grundy,
                  r.winner == cycles::Winner::kFirst ? "first" : "second",
                  static_cast<unsigned long long>(r.nodes), static_cast<long long>(r.millis));
      for (const auto& m : r.moves) {
        const cycles::Edge& e = p.graph().edge(m.move.edge);
        const bool uv = m.move.dir == cycles::Direction::kUV;
        std::printf("  %-6s %s -> %s  child %d%s\n", e.id.c_str(),
                    p.graph().vertex_id(uv ? e.u : e.v).c_str(),
                    p.graph().vertex_id(uv ? e.v : e.u).c_str(), m.child_grundy,
                    m.winning ? "  winning" : "");
      }
      return 0;
    }

    if (*family) {
      if (list_families && json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& f : cycles::FamilyCatalog()) {
          out.push_back({{"name", f.name}, {"parameters", f.parameters}, {"description", f.description}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      if (list_families) {
        for (const auto& f : cycles::FamilyCatalog()) {
          std::printf("%-22s %-50s %s\n", f.name.c_str(), f.parameters.c_str(),
                      f.description.c_str());
        }
        return 0;
      }
      if (family_name.empty()) throw UsageError("family needs a name (see --list)");
      if (family_name == "random_branching_tree") {
        std::fprintf(stderr, "seed %llu\n", static_cast<unsigned long long>(seed));
      }
      cycles::EmbeddedGraph g =
          cycles::Generate(SpecFromFlags(family_name, family_flags, seed));
      std::cout << cycles::GraphToJson(g).dump(json ? -1 : 2) << "\n";
      return 0;
    }

    if (*verify) {
      std::vector<cycles::CheckResult> checks;
      if (*v_copycat) {
        cycles::Position p = LoadPosition(copycat_in);
        const cycles::EmbeddedGraph& g = p.graph();
        auto involutions = cycles::FindInvolutions(g);
        Json certs = Json::array();
        bool certified = false;
        for (const auto& h : involutions) {
          if (!cycles::CopycatApplicable(g, h)) {
            certs.push_back({{"applicable", false}});
            continue;
          }
          cycles::CopycatCertificate c = cycles::VerifyCopycat(g, h);
          certified = certified || c.certified;
          Json j = cycles::CertificateToJson(g, c);
          j["applicable"] = true;
          certs.push_back(std::move(j));
        }
        if (json) {
          std::cout << Json{{"certified", certified}, {"involutions", certs}}.dump(2) << "\n";
        } else {
          std::printf("%s  %zu involutions, copycat %s\n", certified ? "PASS" : "FAIL",
                      involutions.size(), certified ? "certified" : "not certified");
          for (const Json& c : certs) std::printf("  %s\n", c.dump().c_str());
        }
        return certified ? 0 : kExitDomain;
      }
      if (*v_tree) checks.push_back(cycles::BranchingTreeCheck(tree_n.value_or(11), jobs));
      if (*v_ngon) {
        if (ngon_n) {
          checks.push_back(cycles::NgonSpecialCheck(*ngon_n));
        } else {
          for (int n = 3; n <= 10; ++n) checks.push_back(cycles::NgonSpecialCheck(n));
        }
      }
      if (*v_decomp) {
        if (!decomp_in.graph.empty()) {
          checks.push_back(cycles::DecompositionCheck(
              decomp_in.graph, cycles::GraphFromJson(cycles::ParseJson(ReadSource(decomp_in.graph)))));
        } else {
          for (int a = 3; a <= 5; ++a) {
            for (int b = 3; b <= 5; ++b) {
              checks.push_back(cycles::DecompositionCheck(
                  "wedge_cycles(" + std::to_string(a) + "," + std::to_string(b) + ",special)",
                  cycles::WedgeCycles(a, b, true)));
            }
          }
        }
      }
      if (*v_spiders) {
        int max_leg = spider_n.value_or(4);
        for (int x = 2; x <= max_leg; x += 2) {
          for (int y = x; y <= max_leg; y += 2) {
            for (int z = y; z <= max_leg; z += 2) checks.push_back(cycles::SpiderCheck({x, y, z}));
          }
        }
      }
      if (*v_golden) checks = cycles::GoldenChecks();
      return PrintChecks(checks, json);
    }

    if (*search) {
      std::vector<cycles::CorpusEntry> corpus;
      int sources = (!search_family.empty()) + (trees.has_value()) + (!corpus_file.empty());
      if (sources != 1) throw UsageError("search needs exactly one of --family, --trees, --corpus");
      if (!search_family.empty()) corpus = cycles::FamilyRangeCorpus(search_family, from, to);
      if (trees) corpus = cycles::TreeCorpus(*trees);
      if (!corpus_file.empty()) {
        corpus = cycles::CorpusFromJson(cycles::ParseJson(ReadSource(corpus_file)));
      }
      cycles::ScanOptions options;
      options.node_budget = budget;
      options.workers = jobs;
      options.threshold = threshold;
      options.checkpoint_path = checkpoint;
      options.max_graphs = max_graphs;
      cycles::ScanReport report = cycles::ScanCorpus(corpus, options);
      if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write '" + out_file + "'");
        out << cycles::ReportJsonl(report);
      }
      Json summary = cycles::SummaryToJson(report);
      if (json) {
        std::cout << summary.dump(2) << "\n";
      } else {
        for (const auto& r : report.records) {
          std::printf("%-32s size %2d markable %2d %s grundy %s%s%s\n", r.name.c_str(), r.size,
                      r.markable, r.two_connected ? "2-conn" : "      ",
                      r.grundy ? std::to_string(*r.grundy).c_str() : r.status.c_str(),
                      r.parity_violation ? "  PARITY-VIOLATION" : "",
                      r.high_grundy ? "  HIGH-GRUNDY" : "");
        }
        std::printf("%zu/%zu graphs, %d parity violations (%d 2-connected), %d high, max %d\n",
                    report.records.size(), report.corpus_size, report.parity_violations,
                    report.parity_violations_two_connected, report.high_grundy,
                    report.max_grundy);
      }
      return 0;
    }

    if (*serve) {
      cycles::ServiceOptions options;
      if (budget > 0) options.node_budget = budget;
      cycles::AnalysisService service(options);
      std::fprintf(stderr, "listening on http://%s:%d\n", host.c_str(), port);
      if (!cycles::Serve(service, host, port)) {
        std::fprintf(stderr, "error: cannot listen on %s:%d\n", host.c_str(), port);
        return kExitDomain;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CyclesError& e) {
    std::cerr << "error: " << cycles::ErrorCodeName(e.code());
    if (e.reason() != cycles::ErrorCodeName(e.code())) std::cerr << " (" << e.reason() << ")";
    std::cerr << ": " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
