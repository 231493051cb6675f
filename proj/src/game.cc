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

#include "cycles/game.h"

#include <bit>
#include <utility>

#include "cycles/error.h"

namespace cycles {
namespace {

[[noreturn]] void Illegal(const std::string& reason, const std::string& what) {
  throw CyclesError(ErrorCode::kIllegalMove, reason, reason + ": " + what);
}

void RequireUndirected(const Position& p, Move m) {
  if (m.edge < 0 || m.edge >= static_cast<int>(p.graph().num_edges())) {
    Illegal("unknown-edge", "edge index " + std::to_string(m.edge));
  }
  if (p.directed(m.edge)) {
    Illegal("already-directed", "edge '" + p.graph().edge(m.edge).id + "'");
  }
}

}  // namespace

std::string_view DirectionName(Direction d) { return d == Direction::kUV ? "uv" : "vu"; }

std::string_view IllegalReasonName(IllegalReason r) {
  switch (r) {
    case IllegalReason::kAlreadyDirected:
      return "already-directed";
    case IllegalReason::kSinkSource:
      return "sink-source";
    case IllegalReason::kDeathMove:
      return "death-move";
  }
  return "unknown";
}

Board::Board(EmbeddedGraph graph)
    : graph_(std::move(graph)), num_edges_(static_cast<int>(graph_.num_edges())) {
  if (num_edges_ > kMaxEdges) {
    throw CyclesError(ErrorCode::kBudgetExceeded, "too-many-edges",
                      "boards are limited to " + std::to_string(kMaxEdges) + " edges");
  }
  all_edges_ = num_edges_ == 32 ? ~uint32_t{0} : ((uint32_t{1} << num_edges_) - 1);
  vertices_.resize(graph_.num_vertices());
  for (size_t v = 0; v < graph_.num_vertices(); ++v) {
    VertexMasks& vm = vertices_[v];
    vm.special = graph_.is_special(static_cast<int>(v));
    for (int e : graph_.incident(static_cast<int>(v))) {
      vm.incident |= uint32_t{1} << e;
      if (graph_.edge(e).u == static_cast<int>(v)) vm.as_u |= uint32_t{1} << e;
    }
  }
  cells_of_edge_.resize(num_edges_);
  for (size_t c = 0; c < graph_.cells().size(); ++c) {
    const Cell& cell = graph_.cells()[c];
    CellMasks cm;
    for (size_t i = 0; i < cell.edges.size(); ++i) {
      cm.mask |= uint32_t{1} << cell.edges[i];
      if (cell.forward[i]) cm.forward |= uint32_t{1} << cell.edges[i];
      cells_of_edge_[cell.edges[i]].push_back(static_cast<int>(c));
    }
    cells_.push_back(cm);
  }
}

bool Board::VertexBlocked(const VertexMasks& vm, uint32_t directed,
                          uint32_t forward) const {
  if (vm.special || vm.incident == 0) return false;
  if ((directed & vm.incident) != vm.incident) return false;
  // Outgoing: directed u->v with this vertex as u, or v->u with it as v.
  uint32_t out = ((forward & vm.as_u) | (~forward & ~vm.as_u)) & vm.incident;
  return out == vm.incident || out == 0;
}

bool Board::SinkSource(Word w, Move m) const {
  Word next = Apply(w, m);
  uint32_t d = Directed(next);
  uint32_t f = Forward(next);
  const Edge& e = graph_.edge(m.edge);
  return VertexBlocked(vertices_[e.u], d, f) || VertexBlocked(vertices_[e.v], d, f);
}

bool Board::CellConsistent(int c, Word w) const {
  const CellMasks& cm = cells_[c];
  uint32_t dm = cm.mask & Directed(w);
  uint32_t agree = ~(Forward(w) ^ cm.forward) & dm;
  return agree == dm || agree == 0;
}

bool Board::Death(Word w, Move m) const {
  Word next = Apply(w, m);
  uint32_t d = Directed(next);
  for (int c : cells_of_edge_[m.edge]) {
    uint32_t open = cells_[c].mask & ~d;
    if (std::popcount(open) == 1 && CellConsistent(c, next)) return true;
  }
  return false;
}

std::optional<IllegalReason> Board::Check(Word w, Move m) const {
  if ((Directed(w) >> m.edge) & 1) return IllegalReason::kAlreadyDirected;
  if (SinkSource(w, m)) return IllegalReason::kSinkSource;
  if (Death(w, m)) return IllegalReason::kDeathMove;
  return std::nullopt;
}

uint64_t Board::LegalMask(Word w) const {
  uint64_t mask = 0;
  uint32_t open = all_edges_ & ~Directed(w);
  while (open) {
    int e = std::countr_zero(open);
    open &= open - 1;
    for (int dir = 0; dir < 2; ++dir) {
      Move m{e, static_cast<Direction>(dir)};
      if (!SinkSource(w, m) && !Death(w, m)) mask |= uint64_t{1} << m.index();
    }
  }
  return mask;
}

std::optional<std::string> Board::Violation(Word w) const {
  uint32_t d = Directed(w);
  if (d & ~all_edges_) return "orientation names edges the board does not have";
  if (Forward(w) & ~d) return "undirected edge carries a direction bit";
  for (size_t c = 0; c < cells_.size(); ++c) {
    int open = std::popcount(cells_[c].mask & ~d);
    if (open <= 1 && CellConsistent(static_cast<int>(c), w)) {
      return std::string(open == 0 ? "completed" : "pending") + " cell " +
             std::to_string(c);
    }
  }
  for (size_t v = 0; v < vertices_.size(); ++v) {
    if (VertexBlocked(vertices_[v], d, Forward(w))) {
      return "vertex '" + graph_.vertex_id(static_cast<int>(v)) + "' is a sink or source";
    }
  }
  return std::nullopt;
}

Position::Position(std::shared_ptr<const Board> board, Word word)
    : board_(std::move(board)), word_(word) {
  if (auto bad = board_->Violation(word_)) {
    throw CyclesError(ErrorCode::kInvalidPosition, "invalid-position", *bad);
  }
}

Position Position::Empty(std::shared_ptr<const Board> board) {
  return Position(std::move(board), 0, Unchecked{});
}

Position Position::Empty(EmbeddedGraph graph) {
  return Empty(std::make_shared<const Board>(std::move(graph)));
}

int Position::num_directed() const { return std::popcount(Board::Directed(word_)); }

Move MakeMove(const EmbeddedGraph& graph, std::string_view edge_id, std::string_view dir) {
  auto e = graph.FindEdge(edge_id);
  if (!e) Illegal("unknown-edge", "edge '" + std::string(edge_id) + "'");
  if (dir == "uv") return Move{*e, Direction::kUV};
  if (dir == "vu") return Move{*e, Direction::kVU};
  throw CyclesError(ErrorCode::kParse, "bad-direction",
                    "direction must be \"uv\" or \"vu\", got \"" + std::string(dir) + "\"");
}

bool IsSinkSourceViolation(const Position& p, Move m) {
  RequireUndirected(p, m);
  return p.board().SinkSource(p.word(), m);
}

bool IsDeathMove(const Position& p, Move m) {
  RequireUndirected(p, m);
  return p.board().Death(p.word(), m);
}

std::vector<Move> LegalMoves(const Position& p) {
  std::vector<Move> moves;
  uint64_t mask = p.board().LegalMask(p.word());
  while (mask) {
    moves.push_back(Move::FromIndex(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return moves;
}

Position ApplyMove(const Position& p, Move m) {
  RequireUndirected(p, m);
  if (auto reason = p.board().Check(p.word(), m)) {
    Illegal(std::string(IllegalReasonName(*reason)),
            "edge '" + p.graph().edge(m.edge).id + "' " + std::string(DirectionName(m.dir)));
  }
  return Position(p.board_ptr(), Board::Apply(p.word(), m), Position::Unchecked{});
}

bool IsTerminal(const Position& p) { return p.board().LegalMask(p.word()) == 0; }

}  // namespace cycles
