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

#ifndef CYCLES_FAMILIES_H_
#define CYCLES_FAMILIES_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cycles/graph.h"
#include "json.hpp"

namespace cycles {

// Names a family member. Integer parameters go in `ints` (n, k, pendants,
// closed, length, size, seed, a, b), list parameters in `list` (spider leg
// lengths, lollipop attachment positions) and booleans in `flags` (special,
// closed, trimmed).
struct FamilySpec {
  std::string name;
  std::map<std::string, int64_t> ints;
  std::vector<int> list;
  std::map<std::string, bool> flags;

  int64_t Int(const std::string& key, int64_t fallback) const;
  bool Flag(const std::string& key, bool fallback = false) const;
};

struct FamilyInfo {
  std::string name;
  std::string parameters;  // one-line synopsis of the accepted parameters
  std::string description;
};

const std::vector<FamilyInfo>& FamilyCatalog();

// Builds a spec from textual key/value parameters such as URL query strings.
// Integer keys: n k a b pendants length size seed, plus closed when numeric.
// Flags: special closed trimmed ("true"/"false"/"1"/"0"). Lists: legs, at
// (comma separated). Throws kOutOfRange on unparsable values or unknown keys.
FamilySpec FamilySpecFromParams(const std::string& name,
                                const std::map<std::string, std::string>& params);

// Deterministic generator for every named family. Throws kUnknownFamily for
// an unknown name and kOutOfRange for parameters outside the family's range.
EmbeddedGraph Generate(const FamilySpec& spec);

// Convenience wrappers.
EmbeddedGraph Cycle(int n);
EmbeddedGraph CycleWithSpecial(int n);
EmbeddedGraph Lollipop(int n, const std::vector<int>& attach_at, int length = 1);
// Loose end i has lengths[i] edges.
EmbeddedGraph Lollipop(int n, const std::vector<int>& attach_at, const std::vector<int>& lengths);
EmbeddedGraph WedgeTriangleNgon(int n, bool special = false);
EmbeddedGraph WedgeCycles(int a, int b, bool special = false);
EmbeddedGraph Butterfly(bool closed);
EmbeddedGraph Windmill(int blades, int closed = 0);
EmbeddedGraph Fishy(int n);
EmbeddedGraph Box(int boxes);
EmbeddedGraph IceCreamCone();
EmbeddedGraph LayeredCake();
EmbeddedGraph Size9Counterexample();
EmbeddedGraph Spider(const std::vector<int>& legs);
EmbeddedGraph Path(int edges);
EmbeddedGraph Star(int leaves);
EmbeddedGraph RandomBranchingTree(int size, uint64_t seed);

// The versioned catalog of figure transcriptions (parsed once).
const nlohmann::json& CatalogData();

// Free trees with exactly `edges` edges, one per isomorphism class, leaves
// special. Ordered by canonical form.
std::vector<EmbeddedGraph> EnumerateTreesOfSize(int edges);

// Streams every tree with 1..max_edges edges, smallest first. Throws
// kBudgetExceeded when max_edges > budget.
void EnumerateTrees(int max_edges, const std::function<void(const EmbeddedGraph&)>& emit,
                    int budget = 11);
std::vector<EmbeddedGraph> EnumerateTrees(int max_edges, int budget = 11);

}  // namespace cycles

#endif  // CYCLES_FAMILIES_H_
