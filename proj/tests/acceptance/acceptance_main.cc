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

// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exits non-zero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "cycles/error.h"
#include "cycles/families.h"
#include "cycles/game.h"
#include "cycles/graph.h"
#include "cycles/search.h"
#include "cycles/solver.h"
#include "cycles/strategies.h"
#include "cycles/verify.h"
#include "test_util.h"

namespace cycles {
namespace {

using ::cycles::testing::RandomPlayout;
using ::cycles::testing::ReferenceGame;

// Accumulates failures for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename T>
  void ExpectEq(const T& got, const T& want, const std::string& what) {
    if (got != want) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures_.push_back(os.str());
    }
  }
  void Note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return failures_.empty(); }
  std::string Summary() const {
    const std::vector<std::string>& v = ok() ? notes_ : failures_;
    std::string out;
    for (size_t i = 0; i < v.size() && i < 4; ++i) out += (i ? "; " : "") + v[i];
    if (v.size() > 4) out += "; +" + std::to_string(v.size() - 4) + " more";
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int Timed(Check& c, const std::string& name, double limit, const std::function<int()>& f) {
  auto start = std::chrono::steady_clock::now();
  int value = f();
  double s = Seconds(start);
  c.Expect(s < limit, name + " took " + std::to_string(s) + " s");
  return value;
}

int EmptyGrundy(const EmbeddedGraph& g) { return Grundy(Position::Empty(g)); }

void Goldens(Check& c) {
  struct Golden {
    std::string name;
    EmbeddedGraph graph;
    int size;
    int grundy;
  };
  std::vector<Golden> goldens = {
      {"triangle-with-special", CycleWithSpecial(3), 3, 2},
      {"open-butterfly", Butterfly(false), 6, 0},
      {"closed-butterfly", Butterfly(true), 6, 3},
      {"ice-cream-cone", IceCreamCone(), 10, 0},
      {"layered-cake", LayeredCake(), 9, 1},
      {"size9-counterexample", Size9Counterexample(), 9, 0},
  };
  for (const Golden& g : goldens) {
    c.ExpectEq(static_cast<int>(g.graph.num_edges()), g.size, g.name + " size");
    int v = Timed(c, g.name, 5.0, [&] { return EmptyGrundy(g.graph); });
    c.ExpectEq(v, g.grundy, g.name);
  }
  c.Note(std::to_string(goldens.size()) + " graphs");
}

void SpecialPolygons(Check& c) {
  for (int n = 3; n <= 10; ++n) {
    int want = n == 3 ? 2 : n % 2 == 0 ? 0 : 1;
    c.ExpectEq(EmptyGrundy(CycleWithSpecial(n)), want, "n-gon " + std::to_string(n));
  }
  for (int n : {5, 7, 9}) {
    c.ExpectEq(GrundyWithPass(Position::Empty(CycleWithSpecial(n)), 1), 0,
               "n-gon " + std::to_string(n) + " with pass");
  }
  c.Note("n = 3..10, passes at 5, 7, 9");
}

void BranchingTrees(Check& c) {
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  CheckResult r = BranchingTreeCheck(11, jobs);
  c.Expect(r.pass, r.detail);
  c.Note(r.detail);
}

void TriangleWedges(Check& c) {
  for (int n = 4; n <= 7; ++n) {
    c.Expect(WinnerOf(Position::Empty(WedgeTriangleNgon(n))) == Winner::kFirst,
             "triangle + " + std::to_string(n) + "-gon not a first-player win");
    c.ExpectEq(EmptyGrundy(Fishy(n)), n % 2 == 0 ? 2 : 3, "fishy " + std::to_string(n));
  }
  c.Note("n = 4..7");
}

void Spiders(Check& c) {
  for (const std::vector<int>& legs :
       {std::vector<int>{2, 2, 2}, std::vector<int>{2, 2, 4}, std::vector<int>{2, 4, 4}}) {
    c.ExpectEq(EmptyGrundy(Spider(legs)), 0,
               "spider " + std::to_string(legs[0]) + std::to_string(legs[1]) +
                   std::to_string(legs[2]));
  }
  c.Note("(2,2,2) (2,2,4) (2,4,4)");
}

void Lollipops(Check& c) {
  int graphs = 0;
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::vector<int>> placements = {{}};
    for (int i = 1; i <= n; ++i) {
      placements.push_back({i});
      for (int j = i; j <= n; ++j) placements.push_back({i, j});
    }
    for (const std::vector<int>& at : placements) {
      EmbeddedGraph g = Lollipop(n, at);
      int markable = static_cast<int>(Trim(g).num_edges());
      bool first = WinnerOf(Position::Empty(g)) == Winner::kFirst;
      c.Expect(first == (markable % 2 == 1),
               "lollipop n=" + std::to_string(n) + " ends=" + std::to_string(at.size()));
      ++graphs;
    }
  }
  c.Note(std::to_string(graphs) + " lollipops");
}

void ParityScan(Check& c) {
  ScanReport one = ScanCorpus({{"size9_counterexample", Size9Counterexample()}}, {});
  c.ExpectEq(one.parity_violations, 1, "size-9 violations");
  ScanOptions options;
  options.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  ScanReport trees = ScanCorpus(TreeCorpus(9), options);
  c.ExpectEq(trees.parity_violations, 0, "tree violations");
  c.Expect(trees.complete && trees.budget_exceeded == 0, "tree scan incomplete");
  c.Note(std::to_string(trees.corpus_size) + " trees, 0 violations");
}

void OracleEquivalence(Check& c) {
  std::vector<EmbeddedGraph> graphs = {
      CycleWithSpecial(5), Cycle(6),        Butterfly(false),   Butterfly(true),
      Box(2),              Box(3),          Fishy(4),           Fishy(7),
      LayeredCake(),       IceCreamCone(),  Size9Counterexample(),
      Spider({2, 2, 2}),   Lollipop(5, {1, 3}), WedgeCycles(4, 5, true), Windmill(3, 1)};
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int i = 0; checked < 200 && i < 20000; ++i) {
    const EmbeddedGraph& g = graphs[rng() % graphs.size()];
    if (g.num_edges() > 10) continue;
    auto board = std::make_shared<const Board>(g);
    Word w = RandomPlayout(*board, static_cast<int>(rng() % 7), rng);
    int open = static_cast<int>(g.num_edges()) - std::popcount(Board::Directed(w));
    if (open > 7) continue;
    std::vector<int> s = ReferenceGame::FromWord(g, w);
    c.ExpectEq(Grundy(Position(board, w)), ReferenceGame(g).Grundy(s), "random position");
    ++checked;
  }
  c.ExpectEq(checked, 200, "positions checked");
  for (int a : {3, 4, 5}) {
    for (int b : {3, 4, 5}) {
      Position p = Position::Empty(WedgeCycles(a, b, true));
      std::vector<Position> parts = Decompose(p);
      c.ExpectEq(static_cast<int>(parts.size()), 2, "fragments");
      c.ExpectEq(GrundySum(parts), Grundy(p),
                 "wedge " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  c.Note("200 positions, 9 wedges");
}

void Copycat(Check& c) {
  std::vector<std::pair<std::string, EmbeddedGraph>> graphs = {
      {"open butterfly", Butterfly(false)},
      {"4-gon", CycleWithSpecial(4)},
      {"6-gon", CycleWithSpecial(6)},
      {"8-gon", CycleWithSpecial(8)}};
  for (const auto& [name, g] : graphs) {
    bool certified = false;
    for (const Automorphism& h : FindInvolutions(g)) {
      if (!CopycatApplicable(g, h)) continue;
      CopycatCertificate cert = VerifyCopycat(g, h);
      certified |= cert.certified && cert.role == CopycatRole::kSecondPlayer;
    }
    c.Expect(certified, name + " not certified");
    c.ExpectEq(EmptyGrundy(g), 0, name);
  }
  EmbeddedGraph nine = Size9Counterexample();
  std::vector<Automorphism> hs = FindInvolutions(nine);
  c.Expect(!hs.empty(), "size-9 reflection missing");
  for (const Automorphism& h : hs) c.Expect(!CopycatApplicable(nine, h), "size-9 applicable");
  c.Note("4 certified, size-9 rejected");
}

// After a death move from a reachable position, completing the pending cell
// never blocks either end of its last edge.
void CompletingMoves(Check& c) {
  std::vector<EmbeddedGraph> graphs = {CycleWithSpecial(3), Butterfly(false), Butterfly(true),
                                       LayeredCake(), Size9Counterexample()};
  uint64_t positions = 0;
  uint64_t closings = 0;
  for (const EmbeddedGraph& g : graphs) {
    if (g.num_edges() > 9) continue;
    Board board(g);
    ReferenceGame ref(g);
    std::unordered_set<Word> seen = {0};
    std::vector<Word> stack = {0};
    while (!stack.empty()) {
      Word w = stack.back();
      stack.pop_back();
      ++positions;
      std::vector<int> s = ReferenceGame::FromWord(g, w);
      for (size_t e = 0; e < g.num_edges(); ++e) {
        if (s[e] != 0) continue;
        for (int o : {1, -1}) {
          s[e] = o;
          if (ref.BadVertex(s, g.edge(e).u) || ref.BadVertex(s, g.edge(e).v)) {
            s[e] = 0;
            continue;
          }
          for (const Cell& cell : g.cells()) {
            int open;
            bool consistent;
            ref.CellState(s, cell, open, consistent);
            if (open != 1 || !consistent) continue;
            int last = -1;
            for (int x : cell.edges) {
              if (s[x] == 0) last = x;
            }
            for (int lo : {1, -1}) {
              s[last] = lo;
              ref.CellState(s, cell, open, consistent);
              if (consistent) {
                ++closings;
                c.Expect(!ref.BadVertex(s, g.edge(last).u) && !ref.BadVertex(s, g.edge(last).v),
                         "closing move blocks a vertex");
              }
              s[last] = 0;
            }
          }
          s[e] = 0;
        }
      }
      uint64_t legal = board.LegalMask(w);
      while (legal) {
        Word next = Board::Apply(w, Move::FromIndex(std::countr_zero(legal)));
        legal &= legal - 1;
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
  }
  c.Expect(closings > 0, "no closing moves seen");
  c.Note(std::to_string(positions) + " positions, " + std::to_string(closings) +
         " closing moves");
}

void WindmillBox(Check& c) {
  int members = 0;
  int max_grundy = -1;
  for (const CheckResult& r : GoldenChecks()) {
    if (r.name.rfind("windmill", 0) != 0 && r.name.rfind("box", 0) != 0) continue;
    ++members;
    c.Expect(r.pass, r.name + ": " + r.detail);
  }
  const nlohmann::json& fams = CatalogData().at("families");
  for (const char* f : {"windmill", "box"}) {
    for (const nlohmann::json& m : fams.at(f).at("members")) {
      max_grundy = std::max(max_grundy, m.at("grundy").get<int>());
    }
  }
  c.Expect(members > 0, "no catalogued members");
  c.ExpectEq(max_grundy, 3, "largest recorded value");
  c.ExpectEq(EmptyGrundy(Windmill(2, 1)), 3, "windmill k=2 closed=1");
  c.Note(std::to_string(members) + " members, max " + std::to_string(max_grundy));
}

void Performance(Check& c) {
  std::vector<std::pair<EmbeddedGraph, int>> cases = {{Fishy(11), 3}, {CycleWithSpecial(14), 0}};
  for (const auto& [g, want] : cases) {
    c.ExpectEq(static_cast<int>(Trim(g).num_edges()), 14, "markable size");
    auto start = std::chrono::steady_clock::now();
    Solver solver(std::make_shared<const Board>(g));
    int v = solver.Grundy(0);
    double s = Seconds(start);
    size_t bytes = solver.grundy_table().memory_bytes();
    c.Expect(s < 60.0, "solve took " + std::to_string(s) + " s");
    c.Expect(bytes <= (size_t{4} << 30), "table uses " + std::to_string(bytes) + " bytes");
    c.ExpectEq(v, want, "value");
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu edges: %.2f s, %.1f MiB", g.num_edges(), s,
                  static_cast<double>(bytes) / (1 << 20));
    c.Note(buf);
  }
}

int Main() {
  std::vector<Criterion> criteria = {
      {"golden-grundy-values", 30, Goldens},
      {"special-ngon-values", 60, SpecialPolygons},
      {"branching-trees", 120, BranchingTrees},
      {"triangle-ngon-wedges", 120, TriangleWedges},
      {"even-spiders", 60, Spiders},
      {"lollipop-parity", 60, Lollipops},
      {"parity-counterexample-scan", 120, ParityScan},
      {"oracle-equivalence", 120, OracleEquivalence},
      {"copycat-certification", 120, Copycat},
      {"completing-moves", 120, CompletingMoves},
      {"windmill-box-regression", 120, WindmillBox},
      {"performance-14-edges", 60, Performance},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    double s = Seconds(start);
    check.Expect(s < cr.limit_seconds, "over the " + std::to_string(cr.limit_seconds) + " s limit");
    if (!check.ok()) ++failed;
    std::printf("%s  %-28s %8.2f s  %s\n", check.ok() ? "PASS" : "FAIL", cr.name.c_str(), s,
                check.Summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace cycles

int main() { return cycles::Main(); }
