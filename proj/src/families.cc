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

#include "cycles/families.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "catalog_data.h"
#include "cycles/error.h"
#include "cycles/json_io.h"

namespace cycles {
namespace {

[[noreturn]] void OutOfRange(const std::string& family, const std::string& detail) {
  throw CyclesError(ErrorCode::kOutOfRange, "parameter-out-of-range", family + ": " + detail);
}

void Require(bool ok, const std::string& family, const std::string& detail) {
  if (!ok) OutOfRange(family, detail);
}

// Collects vertices and edges in insertion order and names edges e1, e2, ...
class Builder {
 public:
  Builder& Vertex(const std::string& v) {
    if (seen_.insert(v).second) desc_.vertices.push_back(v);
    return *this;
  }
  Builder& Edge(const std::string& u, const std::string& v) {
    Vertex(u);
    Vertex(v);
    desc_.edges.push_back(
        RawEdge{"e" + std::to_string(desc_.edges.size() + 1), u, v});
    return *this;
  }
  Builder& Cell(std::vector<std::string> c) {
    if (!desc_.cells) desc_.cells.emplace();
    desc_.cells->push_back(std::move(c));
    return *this;
  }
  Builder& Special(const std::string& v) {
    desc_.special.push_back(v);
    return *this;
  }
  EmbeddedGraph Build() {
    if (!desc_.cells) desc_.cells.emplace();
    return EmbeddedGraph::FromDescription(desc_);
  }

 private:
  GraphDescription desc_;
  std::set<std::string> seen_;
};

std::string V(const std::string& prefix, int i) { return prefix + std::to_string(i); }

// Adds the cycle prefix1..prefixn (reusing `first` as vertex 1 when given).
std::vector<std::string> AddCycle(Builder& b, const std::string& prefix, int n,
                                  const std::string& first = "") {
  std::vector<std::string> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(i == 1 && !first.empty() ? first : V(prefix, i));
  for (int i = 0; i < n; ++i) b.Edge(vs[i], vs[(i + 1) % n]);
  b.Cell(vs);
  return vs;
}

void CheckSize(const EmbeddedGraph& g, size_t expected, const std::string& family) {
  if (g.num_edges() != expected) {
    throw CyclesError(ErrorCode::kCorruptState, "size-mismatch",
                      family + " has " + std::to_string(g.num_edges()) + " edges, expected " +
                          std::to_string(expected));
  }
}

EmbeddedGraph CatalogGraph(const std::string& name) {
  const nlohmann::json& entry = CatalogData().at("graphs").at(name);
  EmbeddedGraph g = GraphFromJson(entry.at("graph"));
  CheckSize(g, entry.at("size").get<size_t>(), name);
  return g;
}

const nlohmann::json& CatalogMember(const std::string& family,
                                    const std::map<std::string, int64_t>& params) {
  for (const nlohmann::json& m : CatalogData().at("families").at(family).at("members")) {
    bool match = true;
    for (const auto& [k, v] : params) {
      if (!m.contains(k) || m.at(k).get<int64_t>() != v) match = false;
    }
    if (match) return m;
  }
  std::string detail = "no catalogued member with";
  for (const auto& [k, v] : params) detail += " " + k + "=" + std::to_string(v);
  OutOfRange(family, detail);
}

// Rooted-tree canonical form (AHU) over an adjacency list.
std::string RootedForm(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v]) {
    if (w != parent) kids.push_back(RootedForm(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const std::string& k : kids) s += k;
  return s + ")";
}

std::vector<int> Centers(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int i = 0; i < n; ++i) {
    deg[i] = static_cast<int>(adj[i].size());
    if (deg[i] == 1) layer.push_back(i);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string FreeForm(const std::vector<std::vector<int>>& adj) {
  std::string best;
  for (int c : Centers(adj)) {
    std::string f = RootedForm(adj, c, -1);
    if (best.empty() || f < best) best = f;
  }
  return best;
}

// Decodes a parenthesised form into a tree labelled t0, t1, ... in
// breadth-first order from the root. Leaves are special.
EmbeddedGraph TreeFromForm(const std::string& form) {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> stack;
  for (char ch : form) {
    if (ch == '(') {
      int id = static_cast<int>(parent.size());
      parent.push_back(stack.empty() ? -1 : stack.back());
      children.emplace_back();
      if (!stack.empty()) children[stack.back()].push_back(id);
      stack.push_back(id);
    } else {
      stack.pop_back();
    }
  }
  std::vector<int> order{0};
  for (size_t i = 0; i < order.size(); ++i) {
    for (int c : children[order[i]]) order.push_back(c);
  }
  std::vector<int> label(parent.size());
  for (size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i);
  Builder b;
  b.Vertex("t0");
  for (size_t i = 1; i < order.size(); ++i) {
    b.Edge(V("t", label[parent[order[i]]]), V("t", static_cast<int>(i)));
  }
  const size_t n = parent.size();
  for (size_t v = 0; v < n; ++v) {
    size_t deg = children[v].size() + (parent[v] >= 0 ? 1 : 0);
    if (deg <= 1) b.Special(V("t", label[v]));
  }
  return b.Build();
}

}  // namespace

int64_t FamilySpec::Int(const std::string& key, int64_t fallback) const {
  auto it = ints.find(key);
  return it == ints.end() ? fallback : it->second;
}

bool FamilySpec::Flag(const std::string& key, bool fallback) const {
  auto it = flags.find(key);
  return it == flags.end() ? fallback : it->second;
}

FamilySpec FamilySpecFromParams(const std::string& name,
                                const std::map<std::string, std::string>& params) {
  static const std::set<std::string> kInts = {"n", "k", "a", "b", "pendants",
                                              "length", "size", "seed"};
  static const std::set<std::string> kFlags = {"special", "trimmed"};
  auto parse_int = [&](const std::string& key, const std::string& text) -> int64_t {
    try {
      size_t used = 0;
      int64_t v = std::stoll(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    OutOfRange(name, "parameter " + key + " is not an integer: '" + text + "'");
  };
  auto parse_flag = [&](const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text.empty()) return true;
    if (text == "false" || text == "0") return false;
    OutOfRange(name, "flag " + key + " must be true or false");
  };
  FamilySpec spec;
  spec.name = name;
  for (const auto& [key, value] : params) {
    if (kInts.count(key)) {
      spec.ints[key] = parse_int(key, value);
    } else if (kFlags.count(key)) {
      spec.flags[key] = parse_flag(key, value);
    } else if (key == "closed") {
      if (value == "true" || value == "false" || value.empty()) {
        spec.flags[key] = parse_flag(key, value);
      } else {
        spec.ints[key] = parse_int(key, value);
      }
    } else if (key == "legs" || key == "at") {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        spec.list.push_back(static_cast<int>(parse_int(key, item)));
      }
    } else {
      OutOfRange(name, "unknown parameter '" + key + "'");
    }
  }
  return spec;
}

const nlohmann::json& CatalogData() {
  static const nlohmann::json* data =
      new nlohmann::json(nlohmann::json::parse(internal::kCatalogJson));
  return *data;
}

const std::vector<FamilyInfo>& FamilyCatalog() {
  static const std::vector<FamilyInfo>* catalog = new std::vector<FamilyInfo>{
      {"cycle", "n >= 3", "plain n-gon"},
      {"cycle_with_special", "n >= 3", "n-gon with one special vertex"},
      {"lollipop", "n >= 3, pendants >= 0 or at=[positions], length >= 1, trimmed",
       "n-gon with loose ends attached"},
      {"wedge_triangle_ngon", "n >= 3, special", "triangle and n-gon sharing one vertex"},
      {"wedge_cycles", "a >= 3, b >= 3, special", "two cycles sharing one vertex"},
      {"butterfly", "closed", "two triangles sharing a vertex, open or closed wings"},
      {"windmill", "k in 1..5, closed in 0..k-1",
       "k triangles at a hub; `closed` wings enclose the next wing"},
      {"fishy", "n >= 3", "triangle and n-gon sharing a special vertex"},
      {"box", "k in 1..5", "ladder of k squares"},
      {"ice_cream_cone", "", "size 10"},
      {"layered_cake", "", "size 9"},
      {"size9_counterexample", "", "two boxes of triangles sharing the central edge"},
      {"spider", "legs=[l1,l2,...], each >= 1", "legs joined at a centre, leg ends special"},
      {"path", "n >= 1", "path with n edges, endpoints special"},
      {"star", "k >= 1", "k leaves around a centre, leaves special"},
      {"random_branching_tree", "size = 1 or >= 3, seed",
       "random tree with every internal vertex of degree >= 3"},
  };
  return *catalog;
}

EmbeddedGraph Cycle(int n) {
  Require(n >= 3, "cycle", "n must be >= 3");
  Builder b;
  AddCycle(b, "v", n);
  return b.Build();
}

EmbeddedGraph CycleWithSpecial(int n) {
  Require(n >= 3, "cycle_with_special", "n must be >= 3");
  Builder b;
  AddCycle(b, "v", n);
  b.Special("v1");
  return b.Build();
}

EmbeddedGraph Lollipop(int n, const std::vector<int>& attach_at, int length) {
  return Lollipop(n, attach_at, std::vector<int>(attach_at.size(), length));
}

EmbeddedGraph Lollipop(int n, const std::vector<int>& attach_at, const std::vector<int>& lengths) {
  Require(n >= 3, "lollipop", "n must be >= 3");
  Require(lengths.size() == attach_at.size(), "lollipop", "one length per loose end");
  Builder b;
  AddCycle(b, "v", n);
  for (size_t k = 0; k < attach_at.size(); ++k) {
    Require(attach_at[k] >= 1 && attach_at[k] <= n, "lollipop", "attachment position outside 1..n");
    Require(lengths[k] >= 1, "lollipop", "length must be >= 1");
    std::string prev = V("v", attach_at[k]);
    for (int i = 1; i <= lengths[k]; ++i) {
      std::string next = "p" + std::to_string(k + 1) + "_" + std::to_string(i);
      b.Edge(prev, next);
      prev = next;
    }
  }
  return b.Build();
}

EmbeddedGraph WedgeTriangleNgon(int n, bool special) {
  Require(n >= 3, "wedge_triangle_ngon", "n must be >= 3");
  Builder b;
  AddCycle(b, "t", 3, "w");
  AddCycle(b, "v", n, "w");
  if (special) b.Special("w");
  EmbeddedGraph g = b.Build();
  CheckSize(g, n + 3, "wedge_triangle_ngon");
  return g;
}

EmbeddedGraph WedgeCycles(int a, int b_len, bool special) {
  Require(a >= 3 && b_len >= 3, "wedge_cycles", "cycle lengths must be >= 3");
  Builder b;
  AddCycle(b, "a", a, "w");
  AddCycle(b, "b", b_len, "w");
  if (special) b.Special("w");
  EmbeddedGraph g = b.Build();
  CheckSize(g, a + b_len, "wedge_cycles");
  return g;
}

EmbeddedGraph Butterfly(bool closed) {
  // The closed embedding puts one wing inside the other, whose bounded
  // face is then not a simple cycle.
  Builder b;
  b.Edge("w", "a1").Edge("a1", "a2").Edge("a2", "w");
  b.Edge("w", "b1").Edge("b1", "b2").Edge("b2", "w");
  if (!closed) b.Cell({"w", "a1", "a2"});
  b.Cell({"w", "b1", "b2"});
  return b.Build();
}

EmbeddedGraph Windmill(int blades, int closed) {
  return Generate(FamilySpec{"windmill", {{"k", blades}, {"closed", closed}}, {}, {}});
}

EmbeddedGraph Fishy(int n) {
  Require(n >= 3, "fishy", "n must be >= 3");
  EmbeddedGraph g = WedgeTriangleNgon(n, true);
  CheckSize(g, n + 3, "fishy");
  return g;
}

EmbeddedGraph Box(int boxes) {
  return Generate(FamilySpec{"box", {{"k", boxes}}, {}, {}});
}

EmbeddedGraph IceCreamCone() { return CatalogGraph("ice_cream_cone"); }
EmbeddedGraph LayeredCake() { return CatalogGraph("layered_cake"); }
EmbeddedGraph Size9Counterexample() { return CatalogGraph("size9_counterexample"); }

EmbeddedGraph Spider(const std::vector<int>& legs) {
  Require(!legs.empty(), "spider", "at least one leg");
  Builder b;
  b.Vertex("c");
  for (size_t l = 0; l < legs.size(); ++l) {
    Require(legs[l] >= 1, "spider", "leg lengths must be >= 1");
    std::string prev = "c";
    for (int i = 1; i <= legs[l]; ++i) {
      std::string next = "l" + std::to_string(l + 1) + "_" + std::to_string(i);
      b.Edge(prev, next);
      prev = next;
    }
    b.Special(prev);
  }
  return b.Build();
}

EmbeddedGraph Path(int edges) {
  Require(edges >= 1, "path", "n must be >= 1");
  Builder b;
  for (int i = 0; i < edges; ++i) b.Edge(V("v", i), V("v", i + 1));
  b.Special("v0").Special(V("v", edges));
  return b.Build();
}

EmbeddedGraph Star(int leaves) {
  Require(leaves >= 1, "star", "k must be >= 1");
  Builder b;
  for (int i = 1; i <= leaves; ++i) {
    b.Edge("c", V("l", i));
    b.Special(V("l", i));
  }
  if (leaves == 1) b.Special("c");
  return b.Build();
}

EmbeddedGraph RandomBranchingTree(int size, uint64_t seed) {
  Require(size == 1 || size >= 3, "random_branching_tree", "size must be 1 or >= 3");
  if (size == 1) return Star(1);
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi, int remaining) {
    // Uniform in [lo, hi] avoiding a remainder of exactly one edge.
    for (;;) {
      int j = std::uniform_int_distribution<int>(lo, hi)(rng);
      if (remaining - j != 1) return j;
    }
  };
  std::vector<int> parent{-1};
  std::vector<int> leaves;
  int remaining = size;
  int root_children = pick(3, size, remaining);
  for (int i = 0; i < root_children; ++i) {
    parent.push_back(0);
    leaves.push_back(static_cast<int>(parent.size()) - 1);
  }
  remaining -= root_children;
  while (remaining > 0) {
    size_t slot = std::uniform_int_distribution<size_t>(0, leaves.size() - 1)(rng);
    int v = leaves[slot];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(slot));
    int j = pick(2, remaining, remaining);
    for (int i = 0; i < j; ++i) {
      parent.push_back(v);
      leaves.push_back(static_cast<int>(parent.size()) - 1);
    }
    remaining -= j;
  }
  Builder b;
  b.Vertex("t0");
  for (size_t v = 1; v < parent.size(); ++v) {
    b.Edge(V("t", parent[v]), V("t", static_cast<int>(v)));
  }
  std::sort(leaves.begin(), leaves.end());
  for (int v : leaves) b.Special(V("t", v));
  EmbeddedGraph g = b.Build();
  CheckSize(g, size, "random_branching_tree");
  return g;
}

EmbeddedGraph Generate(const FamilySpec& spec) {
  const std::string& name = spec.name;
  auto n = [&](int64_t fallback = -1) {
    int64_t v = spec.Int("n", fallback);
    Require(v >= 0 && v <= 64, name, "parameter n missing or too large");
    return static_cast<int>(v);
  };
  if (name == "cycle") return Cycle(n());
  if (name == "cycle_with_special") return CycleWithSpecial(n());
  if (name == "lollipop") {
    int size = n();
    std::vector<int> at = spec.list;
    if (at.empty()) {
      int64_t pendants = spec.Int("pendants", 1);
      Require(pendants >= 0 && pendants <= size, name, "pendants must be in 0..n");
      for (int i = 1; i <= pendants; ++i) at.push_back(i);
    }
    EmbeddedGraph g = Lollipop(size, at, static_cast<int>(spec.Int("length", 1)));
    return spec.Flag("trimmed") ? Trim(g) : g;
  }
  if (name == "wedge_triangle_ngon") return WedgeTriangleNgon(n(), spec.Flag("special"));
  if (name == "wedge_cycles") {
    int64_t a = spec.Int("a", spec.Int("n", -1));
    int64_t b = spec.Int("b", a);
    Require(a >= 3 && a <= 32 && b >= 3 && b <= 32, name, "a and b must be in 3..32");
    return WedgeCycles(static_cast<int>(a), static_cast<int>(b), spec.Flag("special"));
  }
  if (name == "butterfly") return Butterfly(spec.Flag("closed") || spec.Int("closed", 0) > 0);
  if (name == "fishy") return Fishy(n());
  if (name == "windmill" || name == "box") {
    std::map<std::string, int64_t> params{{"k", spec.Int("k", spec.Int("n", -1))}};
    if (name == "windmill") params["closed"] = spec.Int("closed", spec.Flag("closed") ? 1 : 0);
    const nlohmann::json& member = CatalogMember(name, params);
    EmbeddedGraph g = GraphFromJson(member.at("graph"));
    CheckSize(g, member.at("size").get<size_t>(), name);
    return g;
  }
  if (name == "ice_cream_cone") return IceCreamCone();
  if (name == "layered_cake") return LayeredCake();
  if (name == "size9_counterexample") return Size9Counterexample();
  if (name == "spider") {
    EmbeddedGraph g = Spider(spec.list);
    return spec.Flag("trimmed") ? Trim(g) : g;
  }
  if (name == "path") return Path(n());
  if (name == "star") {
    int64_t k = spec.Int("k", spec.Int("n", -1));
    Require(k >= 1 && k <= 32, name, "k must be in 1..32");
    return Star(static_cast<int>(k));
  }
  if (name == "random_branching_tree") {
    int64_t size = spec.Int("size", spec.Int("n", -1));
    Require(size >= 1 && size <= 32, name, "size must be in 1..32");
    return RandomBranchingTree(static_cast<int>(size),
                               static_cast<uint64_t>(spec.Int("seed", 0)));
  }
  throw CyclesError(ErrorCode::kUnknownFamily, "unknown-family", name);
}

std::vector<EmbeddedGraph> EnumerateTreesOfSize(int edges) {
  Require(edges >= 1, "trees", "edge count must be >= 1");
  // Grow every class of the previous size by one leaf and deduplicate.
  std::set<std::string> forms{"(())"};
  for (int m = 2; m <= edges; ++m) {
    std::set<std::string> next;
    for (const std::string& f : forms) {
      std::vector<std::vector<int>> adj;
      std::vector<int> stack;
      for (char ch : f) {
        if (ch == '(') {
          adj.emplace_back();
          int id = static_cast<int>(adj.size()) - 1;
          if (!stack.empty()) {
            adj[stack.back()].push_back(id);
            adj[id].push_back(stack.back());
          }
          stack.push_back(id);
        } else {
          stack.pop_back();
        }
      }
      const int n = static_cast<int>(adj.size());
      for (int v = 0; v < n; ++v) {
        auto grown = adj;
        grown.emplace_back();
        grown[v].push_back(n);
        grown[n].push_back(v);
        next.insert(FreeForm(grown));
      }
    }
    forms = std::move(next);
  }
  std::vector<EmbeddedGraph> out;
  out.reserve(forms.size());
  for (const std::string& f : forms) out.push_back(TreeFromForm(f));
  return out;
}

void EnumerateTrees(int max_edges, const std::function<void(const EmbeddedGraph&)>& emit,
                    int budget) {
  if (max_edges > budget) {
    throw CyclesError(ErrorCode::kBudgetExceeded, "tree-budget",
                      "max_edges " + std::to_string(max_edges) + " exceeds budget " +
                          std::to_string(budget));
  }
  for (int m = 1; m <= max_edges; ++m) {
    for (const EmbeddedGraph& g : EnumerateTreesOfSize(m)) emit(g);
  }
}

std::vector<EmbeddedGraph> EnumerateTrees(int max_edges, int budget) {
  std::vector<EmbeddedGraph> out;
  EnumerateTrees(max_edges, [&](const EmbeddedGraph& g) { out.push_back(g); }, budget);
  return out;
}

}  // namespace cycles
