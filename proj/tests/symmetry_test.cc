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
#include <random>
#include <set>
#include <vector>

#include "cycles/families.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cycles {
namespace {

using ::cycles::testing::MakeGraph;
using ::cycles::testing::RandomPlayout;

size_t GroupSize(const EmbeddedGraph& g) {
  auto group = EmbeddingAutomorphisms(g);
  return group ? group->size() : 0;
}

// Edge set of every cell, as a sorted list of edge indices.
std::set<std::vector<int>> CellEdgeSets(const EmbeddedGraph& g, const Automorphism* h) {
  std::set<std::vector<int>> out;
  for (const Cell& c : g.cells()) {
    std::vector<int> es;
    for (int e : c.edges) es.push_back(h ? h->edge_map[e] : e);
    std::sort(es.begin(), es.end());
    out.insert(es);
  }
  return out;
}

TEST(AutomorphismTest, GroupSizes) {
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(GroupSize(Cycle(n)), static_cast<size_t>(2 * n)) << n;
  EXPECT_EQ(GroupSize(CycleWithSpecial(5)), 2u);
  EXPECT_EQ(GroupSize(Butterfly(false)), 8u);
  EXPECT_EQ(GroupSize(Butterfly(true)), 4u);
  EXPECT_EQ(GroupSize(Box(1)), 8u);
  EXPECT_EQ(GroupSize(Box(3)), 4u);
  EXPECT_EQ(GroupSize(Star(4)), 24u);
  EXPECT_EQ(GroupSize(MakeGraph("a-b b-c c-a c-d d-e e-c a-x", "a,b,c;c,d,e", "e")), 1u);
}

TEST(AutomorphismTest, ElementsPreserveStructure) {
  for (const EmbeddedGraph& g : {Box(2), Windmill(3, 1), IceCreamCone(), Size9Counterexample(),
                                 Fishy(6), Spider({1, 2, 2})}) {
    auto group = EmbeddingAutomorphisms(g);
    ASSERT_TRUE(group.has_value());
    int identities = 0;
    for (const Automorphism& h : *group) {
      if (h.IsIdentity()) ++identities;
      std::vector<int> vm = h.vertex_map;
      std::sort(vm.begin(), vm.end());
      for (size_t i = 0; i < vm.size(); ++i) EXPECT_EQ(vm[i], static_cast<int>(i));
      for (size_t e = 0; e < g.num_edges(); ++e) {
        const Edge& a = g.edge(static_cast<int>(e));
        const Edge& b = g.edge(h.edge_map[e]);
        int hu = h.vertex_map[a.u];
        int hv = h.vertex_map[a.v];
        if (h.edge_flip[e]) {
          EXPECT_TRUE(hu == b.v && hv == b.u);
        } else {
          EXPECT_TRUE(hu == b.u && hv == b.v);
        }
      }
      for (size_t v = 0; v < g.num_vertices(); ++v) {
        EXPECT_EQ(g.is_special(static_cast<int>(v)), g.is_special(h.vertex_map[v]));
      }
      EXPECT_EQ(CellEdgeSets(g, &h), CellEdgeSets(g, nullptr));
    }
    EXPECT_EQ(identities, 1);
  }
}

TEST(AutomorphismTest, TransformIsAGroupAction) {
  EmbeddedGraph g = Box(2);
  auto group = EmbeddingAutomorphisms(g);
  ASSERT_TRUE(group.has_value());
  Board board(g);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    Word w = RandomPlayout(board, static_cast<int>(rng() % 5), rng);
    for (const Automorphism& h : *group) {
      Word image = h.Transform(w);
      EXPECT_EQ(std::popcount(Board::Directed(image)), std::popcount(Board::Directed(w)));
      EXPECT_FALSE(board.Violation(image).has_value());
      if (h.IsInvolution()) {
        EXPECT_EQ(h.Transform(image), w);
      }
    }
  }
}

TEST(AutomorphismTest, LimitsGiveUp) {
  SymmetryLimits tight;
  tight.max_edges = 5;
  EXPECT_FALSE(EmbeddingAutomorphisms(Cycle(6), tight).has_value());
  tight.max_edges = 16;
  tight.max_group_size = 3;
  EXPECT_FALSE(EmbeddingAutomorphisms(Cycle(6), tight).has_value());
}

TEST(CanonicalizerTest, OrbitMinimum) {
  EmbeddedGraph g = Windmill(3, 0);
  Canonicalizer canon(g, SymmetryLimits{});
  EXPECT_TRUE(canon.reduced());
  auto group = EmbeddingAutomorphisms(g);
  ASSERT_TRUE(group.has_value());
  EXPECT_EQ(canon.group_size(), group->size());
  Board board(g);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    Word w = RandomPlayout(board, static_cast<int>(rng() % 6), rng);
    Word k = canon.Canonical(w);
    EXPECT_LE(k, w);
    for (const Automorphism& h : *group) EXPECT_EQ(canon.Canonical(h.Transform(w)), k);
  }
}

TEST(CanonicalizerTest, FallsBackToIdentity) {
  SymmetryLimits tight;
  tight.max_edges = 3;
  Canonicalizer canon(Cycle(5), tight);
  EXPECT_FALSE(canon.reduced());
  EXPECT_EQ(canon.Canonical(12345), 12345u);
}

}  // namespace
}  // namespace cycles
