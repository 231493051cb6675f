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

#ifndef CYCLES_VERIFY_H_
#define CYCLES_VERIFY_H_

#include <string>
#include <vector>

#include "cycles/graph.h"

namespace cycles {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Grundy values of the named graphs and of every catalogued windmill and box
// member, compared with their recorded values.
std::vector<CheckResult> GoldenChecks();

// Solver value of an n-gon with a special vertex against the closed form, and
// for odd n > 3 the value with one pass available (expected 0).
CheckResult NgonSpecialCheck(int n);

// Every branching tree with at most `max_edges` edges solves to size mod 2.
CheckResult BranchingTreeCheck(int max_edges, int jobs = 1);

// Three-legged spiders with even legs solve to 0.
CheckResult SpiderCheck(const std::vector<int>& legs);

// XOR of the fragments equals the direct value.
CheckResult DecompositionCheck(const std::string& name, const EmbeddedGraph& graph);

// Passes when some qualifying involution is certified and the solver agrees
// with the certified role.
CheckResult CopycatCheck(const std::string& name, const EmbeddedGraph& graph);

}  // namespace cycles

#endif  // CYCLES_VERIFY_H_
