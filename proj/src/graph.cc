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

#include "cycles/graph.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "cycles/error.h"

namespace cycles {
namespace {

[[noreturn]] void Invalid(const std::string& reason, const std::string& what) {
  throw CyclesError(ErrorCode::kInvalidGraph, reason, reason + ": " + what);
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Rotates and possibly reverses a cycle so it starts at its smallest vertex
// and continues towards the smaller neighbour.
std::vector<int> NormalizeCycle(std::vector<int> cycle) {
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

}  // namespace

bool NaturalLess(std::string_view a, std::string_view b) {
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (IsDigit(a[i]) && IsDigit(b[j])) {
      size_t ie = i;
      size_t je = j;
      while (ie < a.size() && IsDigit(a[ie])) ++ie;
      while (je < b.size() && IsDigit(b[je])) ++je;
      std::string_view da = a.substr(i, ie - i);
      std::string_view db = b.substr(j, je - j);
      // Strip leading zeros for the numeric comparison.
      size_t za = da.find_first_not_of('0');
      size_t zb = db.find_first_not_of('0');
      std::string_view na = za == std::string_view::npos ? "" : da.substr(za);
      std::string_view nb = zb == std::string_view::npos ? "" : db.substr(zb);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      if (da.size() != db.size()) return da.size() < db.size();
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

EmbeddedGraph EmbeddedGraph::FromDescription(const GraphDescription& desc) {
  EmbeddedGraph g;
  if (desc.vertices.empty()) Invalid("empty-graph", "no vertices");

  g.vertex_ids_ = desc.vertices;
  std::sort(g.vertex_ids_.begin(), g.vertex_ids_.end(), NaturalLess);
  for (size_t i = 1; i < g.vertex_ids_.size(); ++i) {
    if (g.vertex_ids_[i] == g.vertex_ids_[i - 1]) {
      Invalid("duplicate-id", "vertex '" + g.vertex_ids_[i] + "'");
    }
  }
  std::unordered_map<std::string, int> vindex;
  for (size_t i = 0; i < g.vertex_ids_.size(); ++i) {
    vindex.emplace(g.vertex_ids_[i], static_cast<int>(i));
  }
  auto lookup = [&](const std::string& id, const std::string& context) {
    auto it = vindex.find(id);
    if (it == vindex.end()) {
      Invalid("unknown-vertex", "'" + id + "' in " + context);
    }
    return it->second;
  };

  std::vector<RawEdge> raw = desc.edges;
  std::sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
    return NaturalLess(a.id, b.id);
  });
  std::set<std::pair<int, int>> seen_pairs;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (i > 0 && raw[i].id == raw[i - 1].id) {
      Invalid("duplicate-id", "edge '" + raw[i].id + "'");
    }
    int u = lookup(raw[i].u, "edge '" + raw[i].id + "'");
    int v = lookup(raw[i].v, "edge '" + raw[i].id + "'");
    if (u == v) Invalid("loop", "edge '" + raw[i].id + "'");
    if (!seen_pairs.emplace(std::min(u, v), std::max(u, v)).second) {
      Invalid("parallel-edge", "edge '" + raw[i].id + "'");
    }
    g.edges_.push_back(Edge{raw[i].id, u, v});
  }

  g.special_.assign(g.vertex_ids_.size(), false);
  for (const std::string& s : desc.special) {
    int v = lookup(s, "special set");
    if (g.special_[v]) Invalid("duplicate-id", "special vertex '" + s + "'");
    g.special_[v] = true;
  }

  g.incident_.assign(g.vertex_ids_.size(), {});
  for (size_t e = 0; e < g.edges_.size(); ++e) {
    g.incident_[g.edges_[e].u].push_back(static_cast<int>(e));
    g.incident_[g.edges_[e].v].push_back(static_cast<int>(e));
  }

  // Connectivity.
  std::vector<bool> reached(g.vertex_ids_.size(), false);
  std::vector<int> stack = {0};
  reached[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int e : g.incident_[x]) {
      int y = g.edges_[e].Other(x);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  if (count != g.vertex_ids_.size()) {
    Invalid("disconnected", std::to_string(count) + " of " +
                                std::to_string(g.vertex_ids_.size()) +
                                " vertices reachable");
  }

  std::vector<std::vector<std::string>> cell_ids;
  if (desc.cells) {
    cell_ids = *desc.cells;
  } else if (desc.rotation) {
    FaceWalks walks = DeriveCells(desc.vertices, desc.edges, *desc.rotation,
                                  desc.outer);
    cell_ids = std::move(walks.cells);
    g.diagnostics_ = std::move(walks.dropped);
  }

  std::vector<int> cells_per_edge(g.edges_.size(), 0);
  std::set<std::vector<int>> seen_cells;
  std::vector<std::vector<int>> cycles;
  for (const auto& ids : cell_ids) {
    if (ids.size() < 3) Invalid("cell-too-short", "cell of length " +
                                                      std::to_string(ids.size()));
    std::vector<int> cyc;
    std::set<int> members;
    for (const std::string& id : ids) {
      int v = lookup(id, "cell");
      if (!members.insert(v).second) {
        Invalid("cell-repeated-vertex", "'" + id + "'");
      }
      cyc.push_back(v);
    }
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      auto e = g.EdgeBetween(a, b);
      if (!e) {
        Invalid("cell-non-edge", g.vertex_ids_[a] + "-" + g.vertex_ids_[b]);
      }
      if (++cells_per_edge[*e] > 2) {
        Invalid("edge-in-too-many-cells", "edge '" + g.edges_[*e].id + "'");
      }
    }
    cyc = NormalizeCycle(std::move(cyc));
    if (!seen_cells.insert(cyc).second) {
      Invalid("duplicate-cell", "cell starting at '" + g.vertex_ids_[cyc[0]] + "'");
    }
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end());
  for (auto& cyc : cycles) {
    Cell cell;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      int e = *g.EdgeBetween(a, b);
      cell.edges.push_back(e);
      cell.forward.push_back(g.edges_[e].u == a);
    }
    cell.vertices = std::move(cyc);
    g.cells_.push_back(std::move(cell));
  }
  return g;
}

std::optional<int> EmbeddedGraph::FindVertex(std::string_view id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id,
                             [](const std::string& a, std::string_view b) {
                               return NaturalLess(a, b);
                             });
  if (it == vertex_ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - vertex_ids_.begin());
}

std::optional<int> EmbeddedGraph::FindEdge(std::string_view id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& a, std::string_view b) { return NaturalLess(a.id, b); });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> EmbeddedGraph::EdgeBetween(int a, int b) const {
  for (int e : incident_[a]) {
    if (edges_[e].Other(a) == b) return e;
  }
  return std::nullopt;
}

GraphDescription EmbeddedGraph::ToDescription() const {
  GraphDescription d;
  d.vertices = vertex_ids_;
  for (const Edge& e : edges_) {
    d.edges.push_back(RawEdge{e.id, vertex_ids_[e.u], vertex_ids_[e.v]});
  }
  std::vector<std::vector<std::string>> cells;
  for (const Cell& c : cells_) {
    std::vector<std::string> ids;
    for (int v : c.vertices) ids.push_back(vertex_ids_[v]);
    cells.push_back(std::move(ids));
  }
  d.cells = std::move(cells);
  for (size_t v = 0; v < special_.size(); ++v) {
    if (special_[v]) d.special.push_back(vertex_ids_[v]);
  }
  return d;
}

bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.vertex_ids_ != b.vertex_ids_ || a.special_ != b.special_) return false;
  if (a.edges_.size() != b.edges_.size() || a.cells_.size() != b.cells_.size()) {
    return false;
  }
  for (size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || x.u != y.u || x.v != y.v) return false;
  }
  for (size_t i = 0; i < a.cells_.size(); ++i) {
    if (a.cells_[i].vertices != b.cells_[i].vertices) return false;
  }
  return true;
}

FaceWalks DeriveCells(const std::vector<std::string>& vertices,
                      const std::vector<RawEdge>& edges,
                      const std::map<std::string, std::vector<std::string>>& rotation,
                      int outer) {
  std::vector<RawEdge> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), [](const RawEdge& a, const RawEdge& b) {
    return NaturalLess(a.id, b.id);
  });
  std::unordered_map<std::string, int> eindex;
  for (size_t i = 0; i < sorted.size(); ++i) {
    eindex.emplace(sorted[i].id, static_cast<int>(i));
  }

  // Position of each edge within each endpoint's rotation.
  std::map<std::pair<std::string, int>, size_t> slot;
  for (const auto& [vertex, order] : rotation) {
    for (size_t i = 0; i < order.size(); ++i) {
      auto it = eindex.find(order[i]);
      if (it == eindex.end()) {
        Invalid("bad-rotation", "unknown edge '" + order[i] + "' at '" + vertex + "'");
      }
      const RawEdge& e = sorted[it->second];
      if (e.u != vertex && e.v != vertex) {
        Invalid("bad-rotation", "edge '" + e.id + "' not incident to '" + vertex + "'");
      }
      if (!slot.emplace(std::make_pair(vertex, it->second), i).second) {
        Invalid("bad-rotation", "edge '" + e.id + "' repeated at '" + vertex + "'");
      }
    }
  }
  for (const RawEdge& e : sorted) {
    int id = eindex[e.id];
    if (!slot.count({e.u, id}) || !slot.count({e.v, id})) {
      Invalid("bad-rotation", "edge '" + e.id + "' missing from an endpoint rotation");
    }
  }

  // Darts are indexed 2*e (u->v) and 2*e+1 (v->u).
  const size_t num_darts = 2 * sorted.size();
  auto head = [&](size_t d) {
    const RawEdge& e = sorted[d / 2];
    return d % 2 == 0 ? e.v : e.u;
  };
  auto tail = [&](size_t d) {
    const RawEdge& e = sorted[d / 2];
    return d % 2 == 0 ? e.u : e.v;
  };
  auto next = [&](size_t d) {
    const std::string& y = head(d);
    const auto& order = rotation.at(y);
    size_t i = slot.at({y, static_cast<int>(d / 2)});
    int f = eindex.at(order[(i + 1) % order.size()]);
    return static_cast<size_t>(2 * f + (sorted[f].u == y ? 0 : 1));
  };

  std::vector<int> face_of(num_darts, -1);
  std::vector<std::vector<std::string>> walks;
  for (size_t start = 0; start < num_darts; ++start) {
    if (face_of[start] >= 0) continue;
    int face = static_cast<int>(walks.size());
    std::vector<std::string> walk;
    size_t d = start;
    do {
      face_of[d] = face;
      walk.push_back(tail(d));
      d = next(d);
    } while (d != start);
    walks.push_back(std::move(walk));
  }

  FaceWalks out;
  out.num_faces = static_cast<int>(walks.size());
  // A single isolated vertex has one face and no darts.
  int faces = sorted.empty() ? 1 : out.num_faces;
  if (static_cast<int>(vertices.size()) - static_cast<int>(sorted.size()) + faces != 2) {
    Invalid("euler", "V - E + F = " +
                         std::to_string(static_cast<int>(vertices.size()) -
                                        static_cast<int>(sorted.size()) + faces));
  }
  if (!sorted.empty() && (outer < 0 || outer >= out.num_faces)) {
    Invalid("bad-outer", "outer face index " + std::to_string(outer));
  }
  for (int f = 0; f < out.num_faces; ++f) {
    if (f == outer) continue;
    const auto& walk = walks[f];
    std::set<std::string> distinct(walk.begin(), walk.end());
    if (walk.size() >= 3 && distinct.size() == walk.size()) {
      out.cells.push_back(walk);
    } else {
      std::string line = "face " + std::to_string(f) + " boundary walk is not a simple cycle:";
      for (const auto& v : walk) line += " " + v;
      out.dropped.push_back(std::move(line));
    }
  }
  return out;
}

EmbeddedGraph Trim(const EmbeddedGraph& graph) {
  const size_t n = graph.num_vertices();
  std::vector<bool> vertex_alive(n, true);
  std::vector<bool> edge_alive(graph.num_edges(), true);
  std::vector<bool> special(n);
  std::vector<int> degree(n);
  for (size_t v = 0; v < n; ++v) {
    special[v] = graph.is_special(static_cast<int>(v));
    degree[v] = graph.degree(static_cast<int>(v));
  }
  std::vector<int> work;
  for (size_t v = 0; v < n; ++v) {
    if (degree[v] == 1 && !special[v]) work.push_back(static_cast<int>(v));
  }
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    if (!vertex_alive[v] || degree[v] != 1 || special[v]) continue;
    int e = -1;
    for (int f : graph.incident(v)) {
      if (edge_alive[f]) e = f;
    }
    int w = graph.edge(e).Other(v);
    edge_alive[e] = false;
    vertex_alive[v] = false;
    --degree[w];
    special[w] = true;
  }

  GraphDescription d;
  for (size_t v = 0; v < n; ++v) {
    if (!vertex_alive[v]) continue;
    d.vertices.push_back(graph.vertex_id(static_cast<int>(v)));
    if (special[v]) d.special.push_back(graph.vertex_id(static_cast<int>(v)));
  }
  for (size_t e = 0; e < graph.num_edges(); ++e) {
    if (!edge_alive[e]) continue;
    const Edge& edge = graph.edge(static_cast<int>(e));
    d.edges.push_back(RawEdge{edge.id, graph.vertex_id(edge.u), graph.vertex_id(edge.v)});
  }
  std::vector<std::vector<std::string>> cells;
  for (const Cell& c : graph.cells()) {
    std::vector<std::string> ids;
    for (int v : c.vertices) ids.push_back(graph.vertex_id(v));
    cells.push_back(std::move(ids));
  }
  d.cells = std::move(cells);
  return EmbeddedGraph::FromDescription(d);
}

bool IsTree(const EmbeddedGraph& graph) {
  return graph.cells().empty() && graph.num_edges() + 1 == graph.num_vertices();
}

bool IsTwoConnected(const EmbeddedGraph& graph) {
  const int n = static_cast<int>(graph.num_vertices());
  if (n < 3) return false;
  // Tarjan articulation points, iterative.
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    size_t next;
  };
  std::vector<Frame> stack = {{0, -1, 0}};
  disc[0] = low[0] = timer++;
  int root_children = 0;
  bool articulation = false;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& inc = graph.incident(f.v);
    if (f.next < inc.size()) {
      int e = inc[f.next++];
      if (e == f.parent_edge) continue;
      int w = graph.edge(e).Other(f.v);
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, e, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    int v = f.v;
    stack.pop_back();
    if (!stack.empty()) {
      int p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (p != 0 && low[v] >= disc[p]) articulation = true;
    }
  }
  return !articulation && root_children <= 1;
}

}  // namespace cycles
