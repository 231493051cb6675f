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

#include "cycles/strategies.h"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>
#include <vector>

#include "cycles/error.h"
#include "cycles/json_io.h"

namespace cycles {
namespace {

uint32_t CellEdgeMask(const Cell& c) {
  uint32_t m = 0;
  for (int e : c.edges) m |= uint32_t{1} << e;
  return m;
}

uint32_t ImageMask(const Automorphism& h, uint32_t mask) {
  uint32_t out = 0;
  while (mask) {
    int e = std::countr_zero(mask);
    mask &= mask - 1;
    out |= uint32_t{1} << h.edge_map[e];
  }
  return out;
}

class CopycatSearch {
 public:
  CopycatSearch(const Board& board, const Automorphism& h, uint64_t budget,
                CopycatCertificate& cert)
      : board_(board), h_(h), budget_(budget), cert_(cert) {}

  // Returns false on the first failed reply, leaving the line in `line_`.
  bool Explore(Word w, int depth) {
    if (!seen_.insert(w).second) return true;
    if (++cert_.positions > budget_) {
      throw CyclesError(ErrorCode::kBudgetExceeded, "position-budget",
                        "copycat verification visited more than " + std::to_string(budget_) +
                            " positions");
    }
    cert_.max_depth = std::max(cert_.max_depth, depth);
    uint64_t legal = board_.LegalMask(w);
    if (legal == 0) {
      ++cert_.terminal;
      return true;
    }
    while (legal) {
      Move m = Move::FromIndex(std::countr_zero(legal));
      legal &= legal - 1;
      ++cert_.opponent_moves;
      Word after = Board::Apply(w, m);
      Move reply = MirrorMove(h_, m);
      line_.push_back(m);
      if ((Board::Directed(after) >> reply.edge) & 1) {
        cert_.failure = "mirror-occupied";
        return false;
      }
      if (auto why = board_.Check(after, reply)) {
        line_.push_back(reply);
        cert_.failure = std::string(IllegalReasonName(*why));
        return false;
      }
      line_.push_back(reply);
      if (!Explore(Board::Apply(after, reply), depth + 2)) return false;
      line_.pop_back();
      line_.pop_back();
    }
    return true;
  }

  std::vector<Move>& line() { return line_; }

 private:
  const Board& board_;
  const Automorphism& h_;
  uint64_t budget_;
  CopycatCertificate& cert_;
  std::unordered_set<Word> seen_;
  std::vector<Move> line_;
};

}  // namespace

std::vector<Automorphism> FindInvolutions(const EmbeddedGraph& graph,
                                          const SymmetryLimits& limits) {
  auto group = EmbeddingAutomorphisms(graph, limits);
  if (!group) {
    throw CyclesError(ErrorCode::kBudgetExceeded, "symmetry-budget",
                      "automorphism search exceeded its limits");
  }
  std::vector<Automorphism> out;
  for (Automorphism& h : *group) {
    if (h.IsIdentity() || !h.IsInvolution()) continue;
    if (FixedEdges(h).size() > 1) continue;
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<int> FixedEdges(const Automorphism& h) {
  std::vector<int> fixed;
  for (size_t e = 0; e < h.edge_map.size(); ++e) {
    if (h.edge_map[e] == static_cast<int>(e)) fixed.push_back(static_cast<int>(e));
  }
  return fixed;
}

bool CopycatApplicable(const EmbeddedGraph& graph, const Automorphism& h) {
  for (const Cell& c : graph.cells()) {
    uint32_t mask = CellEdgeMask(c);
    uint32_t image = ImageMask(h, mask);
    if (image != mask && (image & mask) != 0) return false;
  }
  return true;
}

Move MirrorMove(const Automorphism& h, Move m) {
  // The image keeps the direction bit when the edge is flipped; copying in
  // the opposite direction then toggles it once more.
  bool forward = m.dir == Direction::kUV;
  bool image_forward = forward != static_cast<bool>(h.edge_flip[m.edge]);
  return Move{h.edge_map[m.edge], image_forward ? Direction::kVU : Direction::kUV};
}

Move CopycatMove(const Position& after, const Automorphism& h, Move opponent) {
  Move reply = MirrorMove(h, opponent);
  if (after.directed(reply.edge)) {
    throw CyclesError(ErrorCode::kCertificateViolation, "mirror-occupied",
                      "edge " + after.graph().edge(reply.edge).id + " is already directed");
  }
  if (auto why = after.board().Check(after.word(), reply)) {
    throw CyclesError(ErrorCode::kCertificateViolation, std::string(IllegalReasonName(*why)),
                      "copycat reply on edge " + after.graph().edge(reply.edge).id +
                          " is illegal");
  }
  return reply;
}

CopycatCertificate VerifyCopycat(const EmbeddedGraph& graph, const Automorphism& h,
                                 uint64_t position_budget) {
  std::vector<int> fixed = FixedEdges(h);
  if (!h.IsInvolution() || h.IsIdentity() || fixed.size() > 1 ||
      !CopycatApplicable(graph, h)) {
    throw CyclesError(ErrorCode::kCertificateViolation, "not-applicable",
                      "involution does not satisfy the copycat conditions");
  }
  Board board(graph);
  if (fixed.empty()) {
    CopycatCertificate cert;
    CopycatSearch search(board, h, position_budget, cert);
    cert.certified = search.Explore(0, 0);
    if (!cert.certified) cert.counterexample = search.line();
    return cert;
  }
  // First player: open on the fixed edge in whichever direction survives.
  CopycatCertificate failed;
  for (Direction d : {Direction::kUV, Direction::kVU}) {
    Move opening{fixed[0], d};
    CopycatCertificate cert;
    cert.role = CopycatRole::kFirstPlayer;
    cert.opening = opening;
    if (auto why = board.Check(0, opening)) {
      cert.failure = std::string(IllegalReasonName(*why));
      cert.counterexample = {opening};
      failed = cert;
      continue;
    }
    CopycatSearch search(board, h, position_budget, cert);
    cert.certified = search.Explore(Board::Apply(0, opening), 1);
    if (cert.certified) return cert;
    cert.counterexample = {opening};
    cert.counterexample.insert(cert.counterexample.end(), search.line().begin(),
                               search.line().end());
    failed = cert;
  }
  return failed;
}

nlohmann::json CertificateToJson(const EmbeddedGraph& graph, const CopycatCertificate& c) {
  nlohmann::json j;
  j["certified"] = c.certified;
  j["role"] = c.role == CopycatRole::kFirstPlayer ? "first" : "second";
  j["opening"] = c.opening ? MoveToJson(graph, *c.opening) : nlohmann::json(nullptr);
  j["positions"] = c.positions;
  j["opponentMoves"] = c.opponent_moves;
  j["terminal"] = c.terminal;
  j["maxDepth"] = c.max_depth;
  if (!c.certified) {
    nlohmann::json line = nlohmann::json::array();
    for (const Move& m : c.counterexample) line.push_back(MoveToJson(graph, m));
    j["counterexample"] = std::move(line);
    j["failure"] = c.failure;
  }
  return j;
}

bool IsBranchingTree(const EmbeddedGraph& graph) {
  if (!IsTree(graph)) return false;
  EmbeddedGraph t = Trim(graph);
  if (t.num_edges() == 0) return false;
  for (size_t v = 0; v < t.num_vertices(); ++v) {
    int d = t.degree(static_cast<int>(v));
    if (d == 2 && !t.is_special(static_cast<int>(v))) return false;
  }
  return true;
}

int BranchingTreePredict(const EmbeddedGraph& tree) {
  if (!IsBranchingTree(tree)) {
    throw CyclesError(ErrorCode::kInvalidGraph, "not-branching-tree",
                      "graph is not a branching tree");
  }
  return static_cast<int>(Trim(tree).num_edges() % 2);
}

int OddParentCount(const EmbeddedGraph& tree, const std::string& root, uint32_t directed) {
  if (!IsTree(tree)) throw CyclesError(ErrorCode::kInvalidGraph, "not-a-tree", "graph has a cycle");
  auto r = tree.FindVertex(root);
  if (!r) throw CyclesError(ErrorCode::kOutOfRange, "unknown-root", root);
  const int n = static_cast<int>(tree.num_vertices());
  std::vector<int> children(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<int> stack{*r};
  visited[*r] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : tree.incident(v)) {
      int w = tree.edge(e).Other(v);
      if (visited[w]) continue;
      visited[w] = true;
      if (!((directed >> e) & 1)) ++children[v];
      stack.push_back(w);
    }
  }
  return static_cast<int>(std::count_if(children.begin(), children.end(),
                                        [](int c) { return c % 2 == 1; }));
}

int NgonSpecialPredict(int n) {
  if (n < 3) throw CyclesError(ErrorCode::kOutOfRange, "parameter-out-of-range", "n must be >= 3");
  if (n == 3) return 2;
  return n % 2;
}

}  // namespace cycles
