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

#ifndef CYCLES_SOLVER_H_
#define CYCLES_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cycles/game.h"
#include "cycles/symmetry.h"

namespace cycles {

// Least non-negative integer absent from `values` (duplicates allowed).
int Mex(std::span<const int> values);

struct SolverOptions {
  // Key the table by orbit representative under embedding automorphisms.
  bool use_symmetry = true;
  SymmetryLimits symmetry;
  // Maximum number of positions expanded; 0 means unlimited.
  uint64_t node_budget = 0;
  // Maximum number of table entries. Exceeding it is a budget error; entries
  // are never evicted.
  size_t table_capacity = size_t{1} << 27;
};

// Open-addressing map from position key to a small value. Entries are
// write-once: inserting a different value for an existing key throws.
class TranspositionTable {
 public:
  explicit TranspositionTable(size_t capacity);

  std::optional<uint8_t> Find(Word key);
  void Insert(Word key, uint8_t value);

  size_t size() const { return size_; }
  size_t capacity() const { return capacity_; }
  uint64_t hits() const { return hits_; }
  uint64_t misses() const { return misses_; }
  size_t memory_bytes() const;

 private:
  static constexpr Word kEmpty = ~Word{0};

  void Grow();
  size_t Slot(Word key) const;

  size_t capacity_;
  size_t size_ = 0;
  std::vector<Word> keys_;
  std::vector<uint8_t> values_;
  // kEmpty itself is a legal key only for a fully directed 32-edge board.
  std::optional<uint8_t> empty_key_value_;
  uint64_t hits_ = 0;
  uint64_t misses_ = 0;
};

// Memoized backward induction over one board. Not thread-safe; use one
// solver per worker.
class Solver {
 public:
  explicit Solver(std::shared_ptr<const Board> board, SolverOptions options = {});

  // Exact Grundy value of the position with orientation word `w`.
  int Grundy(Word w);
  // True iff the player to move wins; cuts off on the first losing child.
  bool Wins(Word w);

  Word Key(Word w) const { return canon_.Canonical(w); }
  const Board& board() const { return *board_; }
  uint64_t nodes() const { return nodes_; }
  const TranspositionTable& grundy_table() const { return grundy_table_; }
  bool symmetry_reduced() const { return canon_.reduced(); }

 private:
  void CountNode();

  std::shared_ptr<const Board> board_;
  SolverOptions options_;
  Canonicalizer canon_;
  TranspositionTable grundy_table_;
  TranspositionTable win_table_;
  uint64_t nodes_ = 0;
};

enum class Winner { kFirst, kSecond };

struct MoveReport {
  Move move;
  int child_grundy = 0;
  bool winning = false;
};

struct AnalysisReport {
  int grundy = 0;
  Winner winner = Winner::kSecond;
  // Legal moves in (edge, direction) order.
  std::vector<MoveReport> moves;
  uint64_t nodes = 0;
  int64_t millis = 0;
};

int Grundy(const Position& p, const SolverOptions& options = {});
Winner WinnerOf(const Position& p, const SolverOptions& options = {});
AnalysisReport Analyze(const Position& p, const SolverOptions& options = {});

// Equal for positions related by an embedding automorphism; the raw word
// when the symmetry search exceeds its limits.
Word CanonicalKey(const Position& p, const SymmetryLimits& limits = {});

// Splits the position into independent games. Two edges interact only when
// they share a non-special vertex or a cell, so fragments are the classes of
// that relation; a special vertex shared by fragments appears in each.
std::vector<Position> Decompose(const Position& p);

// XOR of the fragments' Grundy values.
int GrundySum(const std::vector<Position>& fragments, const SolverOptions& options = {});

// Grundy value of the position played alongside a nim-heap of size
// `passes`, computed by direct search over the combined game.
int GrundyWithPass(const Position& p, int passes, const SolverOptions& options = {});

}  // namespace cycles

#endif  // CYCLES_SOLVER_H_
