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

#ifndef CYCLES_STRATEGIES_H_
#define CYCLES_STRATEGIES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycles/game.h"
#include "cycles/graph.h"
#include "cycles/symmetry.h"
#include "json.hpp"

namespace cycles {

// Embedding automorphisms h with h*h = id, h != id and at most one edge
// mapped to itself. Throws kBudgetExceeded when the symmetry search gives up.
std::vector<Automorphism> FindInvolutions(const EmbeddedGraph& graph,
                                          const SymmetryLimits& limits = {});

std::vector<int> FixedEdges(const Automorphism& h);

// Every cell is either mapped onto itself or onto a cell sharing no edge
// with it.
bool CopycatApplicable(const EmbeddedGraph& graph, const Automorphism& h);

// The mirror image of `m` under h, reversed: v->w becomes h(w)->h(v).
Move MirrorMove(const Automorphism& h, Move m);

// Reply to the opponent's move `opponent`, already applied in `after`.
// Throws kCertificateViolation ("mirror-occupied", or the illegal-move
// reason) when the mirrored reply cannot be played.
Move CopycatMove(const Position& after, const Automorphism& h, Move opponent);

enum class CopycatRole { kSecondPlayer, kFirstPlayer };

struct CopycatCertificate {
  bool certified = false;
  CopycatRole role = CopycatRole::kSecondPlayer;
  std::optional<Move> opening;  // the first player's move on the fixed edge
  uint64_t positions = 0;       // distinct positions with the opponent to move
  uint64_t opponent_moves = 0;  // opponent moves answered
  uint64_t terminal = 0;        // positions where the opponent is stuck
  int max_depth = 0;            // longest line in moves
  // Populated when certified is false: the line leading to the failure and
  // the reason tag of the failed reply.
  std::vector<Move> counterexample;
  std::string failure;
};

// Plays every opponent line against the copycat. Throws kCertificateViolation
// ("not-applicable") when h fails CopycatApplicable or fixes more than one
// edge, and kBudgetExceeded beyond `position_budget` positions.
CopycatCertificate VerifyCopycat(const EmbeddedGraph& graph, const Automorphism& h,
                                 uint64_t position_budget = 20'000'000);

nlohmann::json CertificateToJson(const EmbeddedGraph& graph, const CopycatCertificate& c);

// Evaluated on the trimmed form.
bool IsBranchingTree(const EmbeddedGraph& graph);

// 1 for odd size, 0 for even. Throws kInvalidGraph ("not-branching-tree").
int BranchingTreePredict(const EmbeddedGraph& tree);

// Internal vertices of the tree rooted at `root` with an odd number of
// children, where edges set in `directed` count as removed. Throws
// kInvalidGraph ("not-a-tree") and kOutOfRange ("unknown-root").
int OddParentCount(const EmbeddedGraph& tree, const std::string& root, uint32_t directed = 0);

// Grundy value of an n-gon with one special vertex. Throws kOutOfRange.
int NgonSpecialPredict(int n);

}  // namespace cycles

#endif  // CYCLES_STRATEGIES_H_
