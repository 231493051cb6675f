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

#ifndef CYCLES_SYMMETRY_H_
#define CYCLES_SYMMETRY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "cycles/game.h"
#include "cycles/graph.h"

namespace cycles {

// A graph automorphism that maps cells onto cells (as cyclic sequences, up to
// rotation and reversal) and special vertices onto special vertices.
struct Automorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  // True when edge e's u endpoint lands on the v endpoint of edge_map[e].
  std::vector<bool> edge_flip;

  bool IsIdentity() const;
  bool IsInvolution() const;
  // Image of an orientation word: edge e's state moves to edge_map[e], with
  // its direction bit flipped when edge_flip[e].
  Word Transform(Word w) const;
};

struct SymmetryLimits {
  int max_edges = 16;
  uint64_t max_search_nodes = 2'000'000;
  size_t max_group_size = 4096;
};

// Every embedding automorphism of the graph, identity first, in
// lexicographic order of vertex maps. nullopt when any limit is hit.
std::optional<std::vector<Automorphism>> EmbeddingAutomorphisms(
    const EmbeddedGraph& graph, const SymmetryLimits& limits = {});

// Orbit representative of orientation words under a symmetry group. Falls
// back to the identity when the group could not be computed.
class Canonicalizer {
 public:
  Canonicalizer() = default;
  Canonicalizer(const EmbeddedGraph& graph, const SymmetryLimits& limits);

  Word Canonical(Word w) const;
  size_t group_size() const { return group_.size() + 1; }
  bool reduced() const { return !group_.empty(); }

 private:
  struct Compiled {
    std::vector<uint8_t> target;
    uint32_t flip = 0;
  };
  // Non-identity elements only.
  std::vector<Compiled> group_;
  int num_edges_ = 0;
};

}  // namespace cycles

#endif  // CYCLES_SYMMETRY_H_
