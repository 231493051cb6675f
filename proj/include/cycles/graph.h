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

#ifndef CYCLES_GRAPH_H_
#define CYCLES_GRAPH_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cycles {

// Identifier ordering used everywhere ids are sorted: runs of digits compare
// numerically, everything else bytewise, so "e2" < "e10".
bool NaturalLess(std::string_view a, std::string_view b);

struct RawEdge {
  std::string id;
  std::string u;
  std::string v;
};

// Unvalidated graph input, as read from JSON. Either `cells` or `rotation`
// (with `outer`) describes the embedding; explicit cells take precedence.
struct GraphDescription {
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
  std::optional<std::vector<std::vector<std::string>>> cells;
  std::optional<std::map<std::string, std::vector<std::string>>> rotation;
  int outer = -1;
  std::vector<std::string> special;
};

struct Edge {
  std::string id;
  int u = 0;
  int v = 0;

  int Other(int x) const { return x == u ? v : u; }
  bool Touches(int x) const { return x == u || x == v; }
};

// A bounded face whose boundary is a simple cycle. edges[i] joins
// vertices[i] and vertices[(i + 1) % n]; forward[i] is true when walking the
// cell in the stored order traverses edges[i] from its u to its v.
struct Cell {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<bool> forward;
};

// The board: a connected simple graph with its bounded-face cells and the set
// of special vertices. Immutable once built; vertices and edges are indexed
// in NaturalLess order of their ids.
class EmbeddedGraph {
 public:
  // Checks every structural invariant and throws CyclesError(kInvalidGraph)
  // with a specific reason on the first violation found.
  static EmbeddedGraph FromDescription(const GraphDescription& desc);

  size_t num_vertices() const { return vertex_ids_.size(); }
  size_t num_edges() const { return edges_.size(); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool is_special(int v) const { return special_[v]; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }

  std::optional<int> FindVertex(std::string_view id) const;
  std::optional<int> FindEdge(std::string_view id) const;
  std::optional<int> EdgeBetween(int a, int b) const;

  // Face walks that were bounded but not simple cycles when the embedding
  // came from a rotation system. Informational only.
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  // Explicit-cells description with everything sorted by id.
  GraphDescription ToDescription() const;

  friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b);

 private:
  EmbeddedGraph() = default;

  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<Cell> cells_;
  std::vector<bool> special_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::string> diagnostics_;
};

struct FaceWalks {
  // Simple-cycle boundaries of every face except the outer one.
  std::vector<std::vector<std::string>> cells;
  // One line per bounded face whose boundary walk repeats a vertex.
  std::vector<std::string> dropped;
  int num_faces = 0;
};

// Traces the faces of a combinatorial embedding. `rotation` lists, for every
// vertex, its incident edge ids in cyclic order. Faces are numbered in the
// order they are first reached when darts are scanned by edge id (u->v before
// v->u); `outer` selects the unbounded one.
FaceWalks DeriveCells(const std::vector<std::string>& vertices,
                      const std::vector<RawEdge>& edges,
                      const std::map<std::string, std::vector<std::string>>& rotation,
                      int outer);

// Removes pendant non-special vertices with their edges, marking each
// neighbour special, until none remain. Cells are unchanged.
EmbeddedGraph Trim(const EmbeddedGraph& graph);

bool IsTree(const EmbeddedGraph& graph);

// No single vertex removal disconnects the graph (and at least 3 vertices).
bool IsTwoConnected(const EmbeddedGraph& graph);

}  // namespace cycles

#endif  // CYCLES_GRAPH_H_
