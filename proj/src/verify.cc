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

#include "cycles/verify.h"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "cycles/families.h"
#include "cycles/game.h"
#include "cycles/search.h"
#include "cycles/solver.h"
#include "cycles/strategies.h"

namespace cycles {
namespace {

CheckResult Timed(const std::string& name, const std::function<bool(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  r.pass = body(r.detail);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CheckResult GrundyEquals(const std::string& name, const EmbeddedGraph& g, int expected) {
  return Timed(name, [&](std::string& detail) {
    int got = Grundy(Position::Empty(g));
    detail = "size " + std::to_string(g.num_edges()) + ", grundy " + std::to_string(got) +
             ", expected " + std::to_string(expected);
    return got == expected;
  });
}

std::string Legs(const std::vector<int>& legs) {
  std::string s;
  for (int l : legs) s += (s.empty() ? "" : ",") + std::to_string(l);
  return s;
}

}  // namespace

std::vector<CheckResult> GoldenChecks() {
  std::vector<CheckResult> out;
  out.push_back(GrundyEquals("triangle with special vertex", CycleWithSpecial(3), 2));
  out.push_back(GrundyEquals("open butterfly", Butterfly(false), 0));
  out.push_back(GrundyEquals("closed butterfly", Butterfly(true), 3));
  for (const char* name : {"ice_cream_cone", "layered_cake", "size9_counterexample"}) {
    const auto& entry = CatalogData().at("graphs").at(name);
    out.push_back(GrundyEquals(name, Generate(FamilySpec{name, {}, {}, {}}),
                               entry.at("grundy").get<int>()));
  }
  for (const char* family : {"windmill", "box"}) {
    for (const auto& m : CatalogData().at("families").at(family).at("members")) {
      FamilySpec spec{family, {{"k", m.at("k").get<int>()}}, {}, {}};
      std::string name = std::string(family) + "(k=" + std::to_string(m.at("k").get<int>());
      if (m.contains("closed")) {
        spec.ints["closed"] = m.at("closed").get<int>();
        name += ",closed=" + std::to_string(m.at("closed").get<int>());
      }
      out.push_back(GrundyEquals(name + ")", Generate(spec), m.at("grundy").get<int>()));
    }
  }
  return out;
}

CheckResult NgonSpecialCheck(int n) {
  return Timed("ngon-special n=" + std::to_string(n), [&](std::string& detail) {
    Position p = Position::Empty(CycleWithSpecial(n));
    int expected = NgonSpecialPredict(n);
    int got = Grundy(p);
    detail = "grundy " + std::to_string(got) + ", expected " + std::to_string(expected);
    bool ok = got == expected;
    if (n % 2 == 1 && n > 3) {
      int with_pass = GrundyWithPass(p, 1);
      detail += ", with one pass " + std::to_string(with_pass) + " (expected 0)";
      ok = ok && with_pass == 0;
    }
    return ok;
  });
}

CheckResult BranchingTreeCheck(int max_edges, int jobs) {
  return Timed("branching trees <= " + std::to_string(max_edges) + " edges",
               [&](std::string& detail) {
                 std::vector<CorpusEntry> corpus;
                 for (CorpusEntry& e : TreeCorpus(max_edges)) {
                   if (IsBranchingTree(e.graph)) corpus.push_back(std::move(e));
                 }
                 ScanOptions options;
                 options.workers = jobs;
                 ScanReport report = ScanCorpus(corpus, options);
                 int mismatches = 0;
                 for (const ScanRecord& r : report.records) {
                   if (!r.grundy || *r.grundy != r.markable % 2) {
                     ++mismatches;
                     if (mismatches == 1) detail = "first mismatch " + r.name + "; ";
                   }
                 }
                 detail += std::to_string(corpus.size()) + " trees, " +
                           std::to_string(mismatches) + " mismatches";
                 return mismatches == 0;
               });
}

CheckResult SpiderCheck(const std::vector<int>& legs) {
  return GrundyEquals("spider(" + Legs(legs) + ")", Spider(legs), 0);
}

CheckResult DecompositionCheck(const std::string& name, const EmbeddedGraph& graph) {
  return Timed("decomposition " + name, [&](std::string& detail) {
    Position p = Position::Empty(graph);
    std::vector<Position> parts = Decompose(p);
    int sum = GrundySum(parts);
    int direct = Grundy(p);
    detail = std::to_string(parts.size()) + " fragments, xor " + std::to_string(sum) +
             ", direct " + std::to_string(direct);
    return sum == direct;
  });
}

CheckResult CopycatCheck(const std::string& name, const EmbeddedGraph& graph) {
  return Timed("copycat " + name, [&](std::string& detail) {
    int applicable = 0;
    for (const Automorphism& h : FindInvolutions(graph)) {
      if (!CopycatApplicable(graph, h)) continue;
      ++applicable;
      CopycatCertificate cert = VerifyCopycat(graph, h);
      if (!cert.certified) continue;
      int g = Grundy(Position::Empty(graph));
      bool second = cert.role == CopycatRole::kSecondPlayer;
      detail = std::string("certified ") + (second ? "second" : "first") + "-player win over " +
               std::to_string(cert.positions) + " positions, grundy " + std::to_string(g);
      return second ? g == 0 : g != 0;
    }
    detail = std::to_string(applicable) + " applicable involutions, none certified";
    return false;
  });
}

}  // namespace cycles
