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

#ifndef CYCLES_GAME_H_
#define CYCLES_GAME_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycles/graph.h"

namespace cycles {

// Orientation word: bit e of the low half is set when edge e is directed, bit
// e of the high half is set when it points from its u to its v.
using Word = uint64_t;

inline constexpr int kMaxEdges = 32;

enum class Direction : uint8_t { kUV = 0, kVU = 1 };

std::string_view DirectionName(Direction d);  // "uv" / "vu"

struct Move {
  int edge = 0;
  Direction dir = Direction::kUV;

  // Ordering used for reports: edge index, then u->v before v->u.
  int index() const { return 2 * edge + static_cast<int>(dir); }
  static Move FromIndex(int i) { return Move{i / 2, static_cast<Direction>(i % 2)}; }

  friend bool operator==(const Move&, const Move&) = default;
};

enum class IllegalReason { kAlreadyDirected, kSinkSource, kDeathMove };

std::string_view IllegalReasonName(IllegalReason r);  // wire tags

// Rule tables precompiled from an EmbeddedGraph: per-vertex incidence masks
// and per-cell edge masks. All rule checks are a handful of bit operations
// on a Word.
class Board {
 public:
  explicit Board(EmbeddedGraph graph);

  const EmbeddedGraph& graph() const { return graph_; }
  int num_edges() const { return num_edges_; }
  uint32_t all_edges() const { return all_edges_; }

  static uint32_t Directed(Word w) { return static_cast<uint32_t>(w); }
  static uint32_t Forward(Word w) { return static_cast<uint32_t>(w >> 32); }
  static Word Pack(uint32_t directed, uint32_t forward) {
    return static_cast<Word>(directed) | (static_cast<Word>(forward & directed) << 32);
  }
  static Word Apply(Word w, Move m) {
    Word bit = Word{1} << m.edge;
    w |= bit;
    if (m.dir == Direction::kUV) w |= bit << 32;
    return w;
  }

  // The move would leave a non-special endpoint with every incident edge
  // directed and all of them pointing the same way relative to it.
  bool SinkSource(Word w, Move m) const;

  // After the move some cell containing the edge has one undirected edge
  // left and all of its directed edges consistent around it.
  bool Death(Word w, Move m) const;

  std::optional<IllegalReason> Check(Word w, Move m) const;
  bool Legal(Word w, Move m) const { return !Check(w, m); }

  // Bit i set iff Move::FromIndex(i) is legal.
  uint64_t LegalMask(Word w) const;

  // Cells that are completed (fully consistent) or pending (one undirected
  // edge, the rest consistent), and non-special sinks/sources. Empty means
  // the word satisfies every position invariant.
  std::optional<std::string> Violation(Word w) const;

  // Cell indices containing edge e.
  const std::vector<int>& cells_of_edge(int e) const { return cells_of_edge_[e]; }
  uint32_t cell_mask(int c) const { return cells_[c].mask; }
  // Edges of cell c traversed u->v in the cell's stored order.
  uint32_t cell_forward(int c) const { return cells_[c].forward; }

  // Consistency of a cell's directed edges: all with or all against the
  // stored traversal.
  bool CellConsistent(int c, Word w) const;

 private:
  struct VertexMasks {
    uint32_t incident = 0;
    uint32_t as_u = 0;  // incident edges whose u is this vertex
    bool special = false;
  };
  struct CellMasks {
    uint32_t mask = 0;
    uint32_t forward = 0;
  };

  bool VertexBlocked(const VertexMasks& vm, uint32_t directed, uint32_t forward) const;

  EmbeddedGraph graph_;
  int num_edges_;
  uint32_t all_edges_;
  std::vector<VertexMasks> vertices_;
  std::vector<CellMasks> cells_;
  std::vector<std::vector<int>> cells_of_edge_;
};

// A game state: a board plus the orientation of each edge. Positions are
// values; the board is shared.
class Position {
 public:
  // Throws kInvalidPosition when the word breaks a position invariant.
  Position(std::shared_ptr<const Board> board, Word word);

  static Position Empty(std::shared_ptr<const Board> board);
  static Position Empty(EmbeddedGraph graph);

  const Board& board() const { return *board_; }
  const std::shared_ptr<const Board>& board_ptr() const { return board_; }
  const EmbeddedGraph& graph() const { return board_->graph(); }
  Word word() const { return word_; }

  bool directed(int e) const { return (Board::Directed(word_) >> e) & 1; }
  // Only meaningful when directed(e).
  Direction direction(int e) const {
    return ((Board::Forward(word_) >> e) & 1) ? Direction::kUV : Direction::kVU;
  }
  int num_directed() const;

  friend bool operator==(const Position& a, const Position& b) {
    return a.board_ == b.board_ && a.word_ == b.word_;
  }

 private:
  struct Unchecked {};
  Position(std::shared_ptr<const Board> board, Word word, Unchecked)
      : board_(std::move(board)), word_(word) {}

  friend Position ApplyMove(const Position& p, Move m);

  std::shared_ptr<const Board> board_;
  Word word_;
};

// Parses a move from wire form; edge must exist.
Move MakeMove(const EmbeddedGraph& graph, std::string_view edge_id, std::string_view dir);

// Throws kIllegalMove("unknown-edge" / "already-directed") when the move does
// not name an undirected edge.
bool IsSinkSourceViolation(const Position& p, Move m);
bool IsDeathMove(const Position& p, Move m);

std::vector<Move> LegalMoves(const Position& p);

// Throws kIllegalMove with the reason tag when the move is not legal.
Position ApplyMove(const Position& p, Move m);

bool IsTerminal(const Position& p);

}  // namespace cycles

#endif  // CYCLES_GAME_H_
