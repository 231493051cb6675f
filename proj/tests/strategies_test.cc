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

#include <bit>
#include <random>
#include <vector>

#include "cycles/error.h"
#include "cycles/families.h"
#include "cycles/solver.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cycles {
namespace {

using ::cycles::testing::MakeGraph;
using ::cycles::testing::RandomPlayout;

// The wing swap of the open butterfly: a1<->b1, a2<->b2.
const Automorphism* WingSwap(const std::vector<Automorphism>& hs, const EmbeddedGraph& g) {
  int a1 = *g.FindVertex("a1");
  int b1 = *g.FindVertex("b1");
  for (const Automorphism& h : hs) {
    if (h.vertex_map[a1] == b1) return &h;
  }
  return nullptr;
}

TEST(InvolutionTest, ButterflyWingSwap) {
  EmbeddedGraph g = Butterfly(false);
  std::vector<Automorphism> hs = FindInvolutions(g);
  const Automorphism* swap = WingSwap(hs, g);
  ASSERT_NE(swap, nullptr);
  EXPECT_TRUE(FixedEdges(*swap).empty());
  EXPECT_TRUE(CopycatApplicable(g, *swap));
}

TEST(InvolutionTest, SpecialPolygonReflection) {
  for (int n = 3; n <= 9; ++n) {
    std::vector<Automorphism> hs = FindInvolutions(CycleWithSpecial(n));
    ASSERT_EQ(hs.size(), 1u) << n;
    EXPECT_EQ(FixedEdges(hs[0]).size(), n % 2 == 1 ? 1u : 0u) << n;
    EXPECT_TRUE(CopycatApplicable(CycleWithSpecial(n), hs[0]));
  }
}

TEST(InvolutionTest, AsymmetricTreeHasNone) {
  EXPECT_TRUE(FindInvolutions(Spider({1, 2, 3})).empty());
}

TEST(InvolutionTest, Size9ReflectionNotApplicable) {
  EmbeddedGraph g = Size9Counterexample();
  std::vector<Automorphism> hs = FindInvolutions(g);
  ASSERT_FALSE(hs.empty());
  for (const Automorphism& h : hs) {
    EXPECT_FALSE(CopycatApplicable(g, h));
    try {
      VerifyCopycat(g, h);
      ADD_FAILURE();
    } catch (const CyclesError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kCertificateViolation);
      EXPECT_EQ(e.reason(), "not-applicable");
    }
  }
}

TEST(CopycatMoveTest, MirrorsButterflyOpening) {
  EmbeddedGraph g = Butterfly(false);
  std::vector<Automorphism> hs = FindInvolutions(g);
  const Automorphism* swap = WingSwap(hs, g);
  ASSERT_NE(swap, nullptr);
  Position empty = Position::Empty(g);
  for (const Move& m : LegalMoves(empty)) {
    Position after = ApplyMove(empty, m);
    Move reply = CopycatMove(after, *swap, m);
    const Edge& e = g.edge(m.edge);
    const Edge& r = g.edge(reply.edge);
    // Same position in the other wing, directed from h(w) to h(v).
    int tail = m.dir == Direction::kUV ? e.u : e.v;
    int head = m.dir == Direction::kUV ? e.v : e.u;
    int rtail = reply.dir == Direction::kUV ? r.u : r.v;
    int rhead = reply.dir == Direction::kUV ? r.v : r.u;
    EXPECT_EQ(rtail, swap->vertex_map[head]);
    EXPECT_EQ(rhead, swap->vertex_map[tail]);
    EXPECT_TRUE(ApplyMove(after, reply).num_directed() == 2);
  }
}

TEST(CopycatMoveTest, FixedEdgeIsNeverAReply) {
  EmbeddedGraph g = CycleWithSpecial(5);
  Automorphism h = FindInvolutions(g)[0];
  int f = FixedEdges(h)[0];
  Position after = ApplyMove(Position::Empty(g), Move{f, Direction::kUV});
  try {
    CopycatMove(after, h, Move{f, Direction::kUV});
    ADD_FAILURE();
  } catch (const CyclesError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCertificateViolation);
    EXPECT_EQ(e.reason(), "mirror-occupied");
  }
}

TEST(CopycatMoveTest, HexagonReplyIsReflected) {
  EmbeddedGraph g = CycleWithSpecial(6);
  Automorphism h = FindInvolutions(g)[0];
  Position empty = Position::Empty(g);
  for (const Move& m : LegalMoves(empty)) {
    Move reply = CopycatMove(ApplyMove(empty, m), h, m);
    EXPECT_EQ(reply.edge, h.edge_map[m.edge]);
    EXPECT_NE(reply.edge, m.edge);
  }
}

TEST(CopycatMoveTest, MirrorIsInvolutive) {
  for (const EmbeddedGraph& g : {Butterfly(false), CycleWithSpecial(7), WedgeTriangleNgon(6),
                                 Box(2), Windmill(4, 0)}) {
    for (const Automorphism& h : FindInvolutions(g)) {
      for (int i = 0; i < 2 * static_cast<int>(g.num_edges()); ++i) {
        Move m = Move::FromIndex(i);
        EXPECT_EQ(MirrorMove(h, MirrorMove(h, m)), m);
      }
    }
  }
}

TEST(VerifyCopycatTest, SecondPlayerCertificates) {
  EmbeddedGraph butterfly = Butterfly(false);
  std::vector<Automorphism> hs = FindInvolutions(butterfly);
  CopycatCertificate c = VerifyCopycat(butterfly, *WingSwap(hs, butterfly));
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.role, CopycatRole::kSecondPlayer);
  EXPECT_FALSE(c.opening.has_value());
  EXPECT_GT(c.positions, 1u);
  EXPECT_EQ(Grundy(Position::Empty(butterfly)), 0);
  for (int n : {4, 6, 8}) {
    EmbeddedGraph g = CycleWithSpecial(n);
    CopycatCertificate cn = VerifyCopycat(g, FindInvolutions(g)[0]);
    EXPECT_TRUE(cn.certified) << n;
    EXPECT_EQ(cn.role, CopycatRole::kSecondPlayer);
    EXPECT_EQ(Grundy(Position::Empty(g)), 0);
  }
}

TEST(VerifyCopycatTest, TriangleWedgeOpensOnFreeTriangleEdge) {
  for (int n : {4, 6, 8}) {
    EmbeddedGraph g = WedgeTriangleNgon(n);
    std::vector<Automorphism> hs = FindInvolutions(g);
    ASSERT_EQ(hs.size(), 1u);
    CopycatCertificate c = VerifyCopycat(g, hs[0]);
    ASSERT_TRUE(c.certified) << n;
    EXPECT_EQ(c.role, CopycatRole::kFirstPlayer);
    ASSERT_TRUE(c.opening.has_value());
    const Edge& e = g.edge(c.opening->edge);
    int w = *g.FindVertex("w");
    EXPECT_FALSE(e.Touches(w));
    EXPECT_NE(Grundy(Position::Empty(g)), 0);
  }
}

TEST(VerifyCopycatTest, AgreesWithSolverOnSmallGraphs) {
  std::vector<EmbeddedGraph> graphs = {Butterfly(false), Box(1),    Box(3),
                                       Windmill(2, 0),   Windmill(4, 0), Fishy(4),
                                       WedgeCycles(4, 4), WedgeCycles(3, 5, true),
                                       Spider({2, 2}),    Star(4),   Cycle(6)};
  int certified = 0;
  for (const EmbeddedGraph& g : graphs) {
    for (const Automorphism& h : FindInvolutions(g)) {
      if (!CopycatApplicable(g, h)) continue;
      CopycatCertificate c = VerifyCopycat(g, h);
      if (!c.certified) {
        EXPECT_FALSE(c.counterexample.empty());
        EXPECT_FALSE(c.failure.empty());
        continue;
      }
      ++certified;
      int value = Grundy(Position::Empty(g));
      if (c.role == CopycatRole::kSecondPlayer) {
        EXPECT_EQ(value, 0);
      } else {
        EXPECT_NE(value, 0);
      }
    }
  }
  EXPECT_GT(certified, 5);
}

TEST(VerifyCopycatTest, BrokenMirrorYieldsCounterexample) {
  // Wing swap with the edge directions scrambled: replies create sinks.
  EmbeddedGraph g = Butterfly(false);
  std::vector<Automorphism> hs = FindInvolutions(g);
  Automorphism h = *WingSwap(hs, g);
  for (size_t e = 0; e < h.edge_flip.size(); ++e) h.edge_flip[e] = !h.edge_flip[e];
  CopycatCertificate c = VerifyCopycat(g, h);
  EXPECT_FALSE(c.certified);
  EXPECT_GE(c.counterexample.size(), 1u);
  EXPECT_FALSE(c.failure.empty());
  nlohmann::json j = CertificateToJson(g, c);
  EXPECT_EQ(j["certified"], false);
  EXPECT_TRUE(j.contains("counterexample"));
}

TEST(BranchingTreeTest, Predicate) {
  EXPECT_TRUE(IsBranchingTree(Star(3)));
  EXPECT_TRUE(IsBranchingTree(Path(1)));
  EXPECT_FALSE(IsBranchingTree(Path(2)));
  EXPECT_FALSE(IsBranchingTree(Spider({2, 1, 1})));
  EXPECT_FALSE(IsBranchingTree(Cycle(4)));
  // Untrimmed 3-star: trimming leaves the centre alone, which has no edges.
  EXPECT_FALSE(IsBranchingTree(MakeGraph("c-x c-y c-z")));
  EXPECT_TRUE(IsBranchingTree(MakeGraph("c-x c-y c-z x-x1 y-y1 z-z1")));
}

TEST(BranchingTreeTest, Predict) {
  EmbeddedGraph seven = MakeGraph("c-a c-b c-d d-e d-f d-g d-h", "", "a,b,e,f,g,h");
  EXPECT_EQ(BranchingTreePredict(seven), 1);
  EmbeddedGraph six = MakeGraph("c-a c-b c-d d-e d-f d-g", "", "a,b,e,f,g");
  EXPECT_EQ(BranchingTreePredict(six), 0);
  EXPECT_EQ(BranchingTreePredict(Path(1)), 1);
  EXPECT_EQ(Grundy(Position::Empty(seven)), 1);
  EXPECT_EQ(Grundy(Position::Empty(six)), 0);
  try {
    BranchingTreePredict(Path(3));
    ADD_FAILURE();
  } catch (const CyclesError& e) {
    EXPECT_EQ(e.reason(), "not-branching-tree");
  }
}

// Children counted from an explicit parent array, for comparison.
int OddParentsByHand(const std::vector<int>& parent) {
  std::vector<int> kids(parent.size(), 0);
  for (int p : parent) {
    if (p >= 0) ++kids[p];
  }
  int odd = 0;
  for (int k : kids) odd += k % 2;
  return odd;
}

TEST(OddParentTest, Examples) {
  EXPECT_EQ(OddParentCount(Star(3), "c"), 1);
  EXPECT_EQ(OddParentCount(Star(4), "c"), 0);
  EmbeddedGraph twin = MakeGraph("c1-a1 c1-a2 c1-a3 c1-c2 c2-b1 c2-b2 c2-b3");
  // Rooted at c1: c1 has four children, c2 has three.
  EXPECT_EQ(OddParentsByHand({-1, 0, 0, 0, 0, 4, 4, 4}), 1);
  EXPECT_EQ(OddParentCount(twin, "c1"), 1);
  EXPECT_EQ(OddParentCount(twin, "c2"), 1);
  try {
    OddParentCount(twin, "zz");
    ADD_FAILURE();
  } catch (const CyclesError& e) {
    EXPECT_EQ(e.reason(), "unknown-root");
  }
}

TEST(OddParentTest, ParityFlipsEveryMove) {
  std::mt19937_64 rng(17);
  for (int size : {3, 5, 6, 8, 11}) {
    for (uint64_t seed = 0; seed < 8; ++seed) {
      EmbeddedGraph t = RandomBranchingTree(size, seed);
      Board board(t);
      for (int line = 0; line < 10; ++line) {
        Word w = 0;
        int parity = OddParentCount(t, "t0") % 2;
        EXPECT_EQ(parity, size % 2);
        for (;;) {
          uint64_t legal = board.LegalMask(w);
          if (legal == 0) break;
          int pick = static_cast<int>(rng() % std::popcount(legal));
          for (int j = 0; j < pick; ++j) legal &= legal - 1;
          w = Board::Apply(w, Move::FromIndex(std::countr_zero(legal)));
          int next = OddParentCount(t, "t0", Board::Directed(w)) % 2;
          EXPECT_NE(next, parity);
          parity = next;
        }
      }
    }
  }
}

TEST(NgonPredictTest, Values) {
  EXPECT_EQ(NgonSpecialPredict(3), 2);
  EXPECT_EQ(NgonSpecialPredict(6), 0);
  EXPECT_EQ(NgonSpecialPredict(7), 1);
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(Grundy(Position::Empty(CycleWithSpecial(n))), NgonSpecialPredict(n)) << n;
  }
  try {
    NgonSpecialPredict(2);
    ADD_FAILURE();
  } catch (const CyclesError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
}

}  // namespace
}  // namespace cycles
