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

#include "cycles/solver.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "cycles/error.h"

namespace cycles {
namespace {

uint64_t Mix(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

constexpr uint64_t ValueBit(int v) { return v < 64 ? uint64_t{1} << v : 0; }

}  // namespace

int Mex(std::span<const int> values) {
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  int m = 0;
  for (int v : sorted) {
    if (v == m) ++m;
    if (v > m) break;
  }
  return m;
}

TranspositionTable::TranspositionTable(size_t capacity) : capacity_(capacity) {
  keys_.assign(1024, kEmpty);
  values_.assign(1024, 0);
}

size_t TranspositionTable::Slot(Word key) const {
  size_t mask = keys_.size() - 1;
  size_t i = Mix(key) & mask;
  while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask;
  return i;
}

std::optional<uint8_t> TranspositionTable::Find(Word key) {
  if (key == kEmpty) {
    (empty_key_value_ ? hits_ : misses_)++;
    return empty_key_value_;
  }
  size_t i = Slot(key);
  if (keys_[i] == kEmpty) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return values_[i];
}

void TranspositionTable::Insert(Word key, uint8_t value) {
  if (key == kEmpty) {
    if (empty_key_value_ && *empty_key_value_ != value) {
      throw CyclesError(ErrorCode::kCorruptState, "table-conflict",
                        "transposition entry rewritten with a different value");
    }
    if (!empty_key_value_) ++size_;
    empty_key_value_ = value;
    return;
  }
  size_t i = Slot(key);
  if (keys_[i] == key) {
    if (values_[i] != value) {
      throw CyclesError(ErrorCode::kCorruptState, "table-conflict",
                        "transposition entry rewritten with a different value");
    }
    return;
  }
  if (size_ >= capacity_) {
    throw CyclesError(ErrorCode::kBudgetExceeded, "table-capacity",
                      "transposition table full at " + std::to_string(capacity_) +
                          " entries");
  }
  keys_[i] = key;
  values_[i] = value;
  ++size_;
  if (2 * size_ > keys_.size()) Grow();
}

void TranspositionTable::Grow() {
  std::vector<Word> old_keys(keys_.size() * 2, kEmpty);
  std::vector<uint8_t> old_values(values_.size() * 2, 0);
  old_keys.swap(keys_);
  old_values.swap(values_);
  for (size_t j = 0; j < old_keys.size(); ++j) {
    if (old_keys[j] == kEmpty) continue;
    size_t i = Slot(old_keys[j]);
    keys_[i] = old_keys[j];
    values_[i] = old_values[j];
  }
}

size_t TranspositionTable::memory_bytes() const {
  return keys_.size() * (sizeof(Word) + sizeof(uint8_t));
}

Solver::Solver(std::shared_ptr<const Board> board, SolverOptions options)
    : board_(std::move(board)),
      options_(options),
      grundy_table_(options.table_capacity),
      win_table_(options.table_capacity) {
  if (options_.use_symmetry) canon_ = Canonicalizer(board_->graph(), options_.symmetry);
}

void Solver::CountNode() {
  ++nodes_;
  if (options_.node_budget != 0 && nodes_ > options_.node_budget) {
    throw CyclesError(ErrorCode::kBudgetExceeded, "node-budget",
                      "node budget of " + std::to_string(options_.node_budget) +
                          " exceeded");
  }
}

int Solver::Grundy(Word w) {
  struct Frame {
    Word word;
    Word key;
    uint64_t moves;
    uint64_t seen;
  };
  Word root_key = Key(w);
  if (auto v = grundy_table_.Find(root_key)) return *v;

  std::vector<Frame> stack;
  stack.reserve(board_->num_edges() + 1);
  CountNode();
  stack.push_back({w, root_key, board_->LegalMask(w), 0});
  int result = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.moves == 0) {
      int value = std::countr_one(f.seen);
      grundy_table_.Insert(f.key, static_cast<uint8_t>(value));
      stack.pop_back();
      if (stack.empty()) {
        result = value;
      } else {
        stack.back().seen |= ValueBit(value);
      }
      continue;
    }
    int idx = std::countr_zero(f.moves);
    f.moves &= f.moves - 1;
    Word child = Board::Apply(f.word, Move::FromIndex(idx));
    Word key = Key(child);
    if (auto v = grundy_table_.Find(key)) {
      f.seen |= ValueBit(*v);
      continue;
    }
    CountNode();
    uint64_t moves = board_->LegalMask(child);
    stack.push_back({child, key, moves, 0});
  }
  return result;
}

bool Solver::Wins(Word w) {
  struct Frame {
    Word word;
    Word key;
    uint64_t moves;
  };
  Word root_key = Key(w);
  if (auto v = win_table_.Find(root_key)) return *v != 0;

  std::vector<Frame> stack;
  CountNode();
  stack.push_back({w, root_key, board_->LegalMask(w)});
  bool result = false;
  // Outcome of the child just finished, for its parent.
  std::optional<bool> pending;
  while (!stack.empty()) {
    Frame& f = stack.back();
    std::optional<bool> outcome;
    if (pending) {
      if (!*pending) outcome = true;
      pending.reset();
    }
    bool descended = false;
    while (!outcome && f.moves != 0) {
      int idx = std::countr_zero(f.moves);
      f.moves &= f.moves - 1;
      Word child = Board::Apply(f.word, Move::FromIndex(idx));
      Word key = Key(child);
      auto v = win_table_.Find(key);
      if (!v) {
        CountNode();
        stack.push_back({child, key, board_->LegalMask(child)});
        descended = true;
        break;
      }
      if (*v == 0) outcome = true;
    }
    if (descended) continue;
    bool wins = outcome.value_or(false);
    win_table_.Insert(stack.back().key, wins ? 1 : 0);
    stack.pop_back();
    if (stack.empty()) {
      result = wins;
    } else {
      pending = wins;
    }
  }
  return result;
}

int Grundy(const Position& p, const SolverOptions& options) {
  Solver solver(p.board_ptr(), options);
  return solver.Grundy(p.word());
}

Winner WinnerOf(const Position& p, const SolverOptions& options) {
  Solver solver(p.board_ptr(), options);
  return solver.Wins(p.word()) ? Winner::kFirst : Winner::kSecond;
}

AnalysisReport Analyze(const Position& p, const SolverOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Solver solver(p.board_ptr(), options);
  AnalysisReport report;
  report.grundy = solver.Grundy(p.word());
  report.winner = report.grundy != 0 ? Winner::kFirst : Winner::kSecond;
  for (const Move& m : LegalMoves(p)) {
    MoveReport mr;
    mr.move = m;
    mr.child_grundy = solver.Grundy(Board::Apply(p.word(), m));
    mr.winning = mr.child_grundy == 0;
    report.moves.push_back(mr);
  }
  report.nodes = solver.nodes();
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

Word CanonicalKey(const Position& p, const SymmetryLimits& limits) {
  Canonicalizer canon(p.graph(), limits);
  return canon.Canonical(p.word());
}

std::vector<Position> Decompose(const Position& p) {
  const EmbeddedGraph& g = p.graph();
  const int m = static_cast<int>(g.num_edges());
  if (m == 0) return {p};

  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.is_special(static_cast<int>(v))) continue;
    const auto& inc = g.incident(static_cast<int>(v));
    for (size_t i = 1; i < inc.size(); ++i) unite(inc[0], inc[i]);
  }
  for (const Cell& c : g.cells()) {
    for (size_t i = 1; i < c.edges.size(); ++i) unite(c.edges[0], c.edges[i]);
  }

  // Fragments ordered by their smallest edge.
  std::map<int, std::vector<int>> classes;
  std::vector<int> first_of_root(m, -1);
  for (int e = 0; e < m; ++e) {
    int r = find(e);
    if (first_of_root[r] < 0) first_of_root[r] = e;
    classes[first_of_root[r]].push_back(e);
  }
  if (classes.size() == 1) return {p};

  std::vector<Position> out;
  for (const auto& [first, edges] : classes) {
    std::vector<bool> in_fragment(m, false);
    std::vector<bool> touched(g.num_vertices(), false);
    GraphDescription d;
    uint32_t directed = 0;
    uint32_t forward = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = g.edge(edges[i]);
      in_fragment[edges[i]] = true;
      touched[e.u] = touched[e.v] = true;
      d.edges.push_back(RawEdge{e.id, g.vertex_id(e.u), g.vertex_id(e.v)});
    }
    for (size_t v = 0; v < g.num_vertices(); ++v) {
      if (!touched[v]) continue;
      d.vertices.push_back(g.vertex_id(static_cast<int>(v)));
      if (g.is_special(static_cast<int>(v))) d.special.push_back(g.vertex_id(static_cast<int>(v)));
    }
    std::vector<std::vector<std::string>> cells;
    for (const Cell& c : g.cells()) {
      if (!in_fragment[c.edges[0]]) continue;
      std::vector<std::string> ids;
      for (int v : c.vertices) ids.push_back(g.vertex_id(v));
      cells.push_back(std::move(ids));
    }
    d.cells = std::move(cells);
    auto board = std::make_shared<const Board>(EmbeddedGraph::FromDescription(d));
    // Edge indices are re-sorted by id within the fragment.
    for (int e : edges) {
      if (!p.directed(e)) continue;
      int local = *board->graph().FindEdge(g.edge(e).id);
      directed |= uint32_t{1} << local;
      if (p.direction(e) == Direction::kUV) forward |= uint32_t{1} << local;
    }
    out.emplace_back(std::move(board), Board::Pack(directed, forward));
  }
  return out;
}

int GrundySum(const std::vector<Position>& fragments, const SolverOptions& options) {
  int x = 0;
  for (const Position& f : fragments) x ^= Grundy(f, options);
  return x;
}

int GrundyWithPass(const Position& p, int passes, const SolverOptions& options) {
  if (passes < 0) {
    throw CyclesError(ErrorCode::kOutOfRange, "negative-passes", "passes must be >= 0");
  }
  const Board& board = p.board();
  Canonicalizer canon;
  if (options.use_symmetry) canon = Canonicalizer(board.graph(), options.symmetry);
  uint64_t nodes = 0;
  std::map<std::pair<Word, int>, int> table;
  std::function<int(Word, int)> solve = [&](Word w, int heap) -> int {
    Word key = canon.Canonical(w);
    auto it = table.find({key, heap});
    if (it != table.end()) return it->second;
    if (options.node_budget != 0 && ++nodes > options.node_budget) {
      throw CyclesError(ErrorCode::kBudgetExceeded, "node-budget",
                        "node budget exceeded in pass search");
    }
    std::vector<int> children;
    uint64_t moves = board.LegalMask(w);
    while (moves) {
      int idx = std::countr_zero(moves);
      moves &= moves - 1;
      children.push_back(solve(Board::Apply(w, Move::FromIndex(idx)), heap));
    }
    for (int smaller = 0; smaller < heap; ++smaller) children.push_back(solve(w, smaller));
    int value = Mex(children);
    table.emplace(std::make_pair(key, heap), value);
    return value;
  };
  return solve(p.word(), passes);
}

}  // namespace cycles
