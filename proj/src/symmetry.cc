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

#include "cycles/symmetry.h"

#include <algorithm>
#include <bit>
#include <set>

namespace cycles {
namespace {

std::vector<int> Normalize(std::vector<int> cycle) {
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

class Search {
 public:
  Search(const EmbeddedGraph& g, const SymmetryLimits& limits)
      : g_(g), limits_(limits), n_(static_cast<int>(g.num_vertices())) {
    adjacent_.assign(n_, std::vector<bool>(n_, false));
    for (const Edge& e : g.edges()) {
      adjacent_[e.u][e.v] = adjacent_[e.v][e.u] = true;
    }
    cells_at_.assign(n_, 0);
    for (const Cell& c : g.cells()) {
      for (int v : c.vertices) ++cells_at_[v];
      cell_set_.insert(c.vertices);
    }
    // BFS order so every vertex after the first has a mapped neighbour.
    std::vector<bool> seen(n_, false);
    order_.push_back(0);
    seen[0] = true;
    for (size_t i = 0; i < order_.size(); ++i) {
      for (int e : g.incident(order_[i])) {
        int w = g.edge(e).Other(order_[i]);
        if (!seen[w]) {
          seen[w] = true;
          order_.push_back(w);
        }
      }
    }
    image_.assign(n_, -1);
    used_.assign(n_, false);
  }

  bool Run() {
    Recurse(0);
    return !over_budget_;
  }

  std::vector<Automorphism> TakeResult() { return std::move(found_); }

 private:
  bool Compatible(int v, int w) const {
    if (g_.degree(v) != g_.degree(w)) return false;
    if (g_.is_special(v) != g_.is_special(w)) return false;
    if (cells_at_[v] != cells_at_[w]) return false;
    for (int x = 0; x < n_; ++x) {
      if (image_[x] < 0) continue;
      if (adjacent_[v][x] != adjacent_[w][image_[x]]) return false;
    }
    return true;
  }

  void Recurse(size_t depth) {
    if (over_budget_) return;
    if (++nodes_ > limits_.max_search_nodes) {
      over_budget_ = true;
      return;
    }
    if (depth == order_.size()) {
      Emit();
      return;
    }
    int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || !Compatible(v, w)) continue;
      image_[v] = w;
      used_[w] = true;
      Recurse(depth + 1);
      used_[w] = false;
      image_[v] = -1;
      if (over_budget_) return;
    }
  }

  void Emit() {
    for (const Cell& c : g_.cells()) {
      std::vector<int> img;
      img.reserve(c.vertices.size());
      for (int v : c.vertices) img.push_back(image_[v]);
      if (!cell_set_.count(Normalize(std::move(img)))) return;
    }
    Automorphism a;
    a.vertex_map = image_;
    for (const Edge& e : g_.edges()) {
      int target = *g_.EdgeBetween(image_[e.u], image_[e.v]);
      a.edge_map.push_back(target);
      a.edge_flip.push_back(g_.edge(target).u != image_[e.u]);
    }
    found_.push_back(std::move(a));
    if (found_.size() > limits_.max_group_size) over_budget_ = true;
  }

  const EmbeddedGraph& g_;
  const SymmetryLimits& limits_;
  int n_;
  std::vector<std::vector<bool>> adjacent_;
  std::vector<int> cells_at_;
  std::set<std::vector<int>> cell_set_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Automorphism> found_;
  uint64_t nodes_ = 0;
  bool over_budget_ = false;
};

}  // namespace

bool Automorphism::IsIdentity() const {
  for (size_t i = 0; i < vertex_map.size(); ++i) {
    if (vertex_map[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Automorphism::IsInvolution() const {
  for (size_t i = 0; i < vertex_map.size(); ++i) {
    if (vertex_map[vertex_map[i]] != static_cast<int>(i)) return false;
  }
  return true;
}

Word Automorphism::Transform(Word w) const {
  uint32_t d = Board::Directed(w);
  uint32_t f = Board::Forward(w);
  uint32_t nd = 0;
  uint32_t nf = 0;
  while (d) {
    int e = std::countr_zero(d);
    d &= d - 1;
    uint32_t bit = uint32_t{1} << edge_map[e];
    nd |= bit;
    if (((f >> e) & 1) != static_cast<uint32_t>(edge_flip[e])) nf |= bit;
  }
  return Board::Pack(nd, nf);
}

std::optional<std::vector<Automorphism>> EmbeddingAutomorphisms(
    const EmbeddedGraph& graph, const SymmetryLimits& limits) {
  if (static_cast<int>(graph.num_edges()) > limits.max_edges) return std::nullopt;
  Search search(graph, limits);
  if (!search.Run()) return std::nullopt;
  return search.TakeResult();
}

Canonicalizer::Canonicalizer(const EmbeddedGraph& graph, const SymmetryLimits& limits)
    : num_edges_(static_cast<int>(graph.num_edges())) {
  auto group = EmbeddingAutomorphisms(graph, limits);
  if (!group) return;
  for (const Automorphism& a : *group) {
    if (a.IsIdentity()) continue;
    Compiled c;
    for (int e = 0; e < num_edges_; ++e) {
      c.target.push_back(static_cast<uint8_t>(a.edge_map[e]));
      if (a.edge_flip[e]) c.flip |= uint32_t{1} << e;
    }
    group_.push_back(std::move(c));
  }
}

Word Canonicalizer::Canonical(Word w) const {
  Word best = w;
  const uint32_t d = Board::Directed(w);
  const uint32_t f = Board::Forward(w);
  for (const Compiled& c : group_) {
    uint32_t nd = 0;
    uint32_t nf = 0;
    uint32_t rest = d;
    uint32_t flipped = (f ^ c.flip) & d;
    while (rest) {
      int e = std::countr_zero(rest);
      rest &= rest - 1;
      uint32_t bit = uint32_t{1} << c.target[e];
      nd |= bit;
      if ((flipped >> e) & 1) nf |= bit;
    }
    Word img = Board::Pack(nd, nf);
    if (img < best) best = img;
  }
  return best;
}

}  // namespace cycles
