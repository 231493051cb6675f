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

#ifndef CYCLES_SEARCH_H_
#define CYCLES_SEARCH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycles/graph.h"
#include "json.hpp"

namespace cycles {

struct CorpusEntry {
  std::string name;
  EmbeddedGraph graph;
};

// Members of a family with the size parameter running over lo..hi. For
// windmill every catalogued embedding with k in range is included.
std::vector<CorpusEntry> FamilyRangeCorpus(const std::string& family, int lo, int hi);

// All trees with 1..max_edges edges.
std::vector<CorpusEntry> TreeCorpus(int max_edges);

// Accepts a single graph, an array of graphs, an array of {"name", "graph"}
// objects, or an object holding such an array under "graphs".
std::vector<CorpusEntry> CorpusFromJson(const nlohmann::json& j);

std::string CorpusDigest(const std::vector<CorpusEntry>& corpus);

struct ScanOptions {
  uint64_t node_budget = 0;  // per graph; 0 means unlimited
  int workers = 1;
  int threshold = 4;
  size_t batch_size = 16;
  std::string checkpoint_path;  // empty disables checkpointing
  size_t max_graphs = 0;        // stop after this many new graphs; 0 means all
  bool reverify = true;
};

struct ScanRecord {
  size_t index = 0;  // position in the corpus
  std::string name;
  std::string digest;
  int size = 0;
  int markable = 0;
  bool two_connected = false;
  std::string status;  // "solved", "budget-exceeded", "too-large", "reverify-mismatch"
  std::optional<int> grundy;
  uint64_t nodes = 0;
  bool parity_violation = false;
  bool high_grundy = false;
  bool reverified = false;
};

struct ScanReport {
  std::string corpus_digest;
  size_t corpus_size = 0;
  bool complete = false;
  int threshold = 4;
  std::vector<ScanRecord> records;  // sorted by digest, then name, then index
  std::map<int, std::map<int, int>> histogram;  // size -> grundy -> count
  int budget_exceeded = 0;
  int parity_violations = 0;
  int parity_violations_two_connected = 0;
  int high_grundy = 0;
  int max_grundy = -1;
};

// Solves every graph of the corpus. Per-graph budget failures are recorded,
// not thrown. With a checkpoint path, progress is written after each batch
// and a rerun resumes from it; throws kDigestMismatch if the checkpoint
// belongs to another corpus and kCorruptState if it cannot be read.
ScanReport ScanCorpus(const std::vector<CorpusEntry>& corpus, const ScanOptions& options);

nlohmann::json RecordToJson(const ScanRecord& r);
ScanRecord RecordFromJson(const nlohmann::json& j);
nlohmann::json SummaryToJson(const ScanReport& report);
// One record per line.
std::string ReportJsonl(const ScanReport& report);

}  // namespace cycles

#endif  // CYCLES_SEARCH_H_
