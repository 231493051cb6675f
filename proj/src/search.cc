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

#include "cycles/search.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "cycles/error.h"
#include "cycles/families.h"
#include "cycles/game.h"
#include "cycles/json_io.h"
#include "cycles/solver.h"

namespace cycles {
namespace {

constexpr int kCheckpointVersion = 1;

std::string Fnv(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ScanRecord ScanOne(const CorpusEntry& entry, size_t index, const ScanOptions& options) {
  const EmbeddedGraph& g = entry.graph;
  ScanRecord r;
  r.index = index;
  r.name = entry.name;
  r.digest = GraphDigest(g);
  r.size = static_cast<int>(g.num_edges());
  r.two_connected = IsTwoConnected(g);
  r.markable = static_cast<int>(Trim(g).num_edges());
  if (g.num_edges() > static_cast<size_t>(kMaxEdges)) {
    r.status = "too-large";
    return r;
  }
  auto board = std::make_shared<const Board>(g);
  SolverOptions so;
  so.node_budget = options.node_budget;
  try {
    Solver solver(board, so);
    r.grundy = solver.Grundy(0);
    r.nodes = solver.nodes();
  } catch (const CyclesError& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    r.status = "budget-exceeded";
    return r;
  }
  r.status = "solved";
  r.parity_violation = (r.markable % 2 == 1) == (*r.grundy == 0);
  r.high_grundy = *r.grundy >= options.threshold;
  if (r.high_grundy && options.reverify) {
    SolverOptions plain = so;
    plain.use_symmetry = false;
    plain.node_budget = 0;
    Solver fresh(board, plain);
    r.reverified = fresh.Grundy(0) == *r.grundy;
    if (!r.reverified) r.status = "reverify-mismatch";
  }
  return r;
}

void WriteAtomically(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw CyclesError(ErrorCode::kCorruptState, "checkpoint-write", "cannot write " + tmp);
    }
    out << text;
    if (!out.flush()) {
      throw CyclesError(ErrorCode::kCorruptState, "checkpoint-write", "cannot write " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

void SaveCheckpoint(const std::string& path, const std::string& digest,
                    const std::vector<ScanRecord>& done) {
  nlohmann::json j;
  j["version"] = kCheckpointVersion;
  j["corpusDigest"] = digest;
  nlohmann::json records = nlohmann::json::array();
  for (const ScanRecord& r : done) records.push_back(RecordToJson(r));
  j["records"] = std::move(records);
  WriteAtomically(path, j.dump() + "\n");
}

std::vector<ScanRecord> LoadCheckpoint(const std::string& path, const std::string& digest,
                                       size_t corpus_size) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<ScanRecord> done;
  try {
    nlohmann::json j = nlohmann::json::parse(ss.str());
    if (j.at("version").get<int>() != kCheckpointVersion) {
      throw CyclesError(ErrorCode::kCorruptState, "checkpoint-version", path);
    }
    if (j.at("corpusDigest").get<std::string>() != digest) {
      throw CyclesError(ErrorCode::kDigestMismatch, "corpus-digest-mismatch",
                        "checkpoint " + path + " was written for a different corpus");
    }
    for (const nlohmann::json& r : j.at("records")) done.push_back(RecordFromJson(r));
  } catch (const nlohmann::json::exception& e) {
    throw CyclesError(ErrorCode::kCorruptState, "checkpoint-unreadable", e.what());
  }
  for (const ScanRecord& r : done) {
    if (r.index >= corpus_size) {
      throw CyclesError(ErrorCode::kCorruptState, "checkpoint-unreadable",
                        "record index out of range");
    }
  }
  return done;
}

void Summarize(ScanReport& report) {
  std::sort(report.records.begin(), report.records.end(),
            [](const ScanRecord& a, const ScanRecord& b) {
              return std::tie(a.digest, a.name, a.index) < std::tie(b.digest, b.name, b.index);
            });
  for (const ScanRecord& r : report.records) {
    if (r.status == "budget-exceeded") ++report.budget_exceeded;
    if (!r.grundy) continue;
    ++report.histogram[r.size][*r.grundy];
    report.max_grundy = std::max(report.max_grundy, *r.grundy);
    if (r.parity_violation) {
      ++report.parity_violations;
      if (r.two_connected) ++report.parity_violations_two_connected;
    }
    if (r.high_grundy) ++report.high_grundy;
  }
}

}  // namespace

std::vector<CorpusEntry> FamilyRangeCorpus(const std::string& family, int lo, int hi) {
  std::vector<CorpusEntry> out;
  if (family == "windmill") {
    for (const nlohmann::json& m : CatalogData().at("families").at("windmill").at("members")) {
      int k = m.at("k").get<int>();
      int closed = m.at("closed").get<int>();
      if (k < lo || k > hi) continue;
      out.push_back({"windmill(k=" + std::to_string(k) + ",closed=" + std::to_string(closed) + ")",
                     Windmill(k, closed)});
    }
    return out;
  }
  const std::string key = family == "box" || family == "star" ? "k" : "n";
  for (int i = lo; i <= hi; ++i) {
    FamilySpec spec{family, {{key, i}}, {}, {}};
    out.push_back({family + "(" + key + "=" + std::to_string(i) + ")", Generate(spec)});
  }
  return out;
}

std::vector<CorpusEntry> TreeCorpus(int max_edges) {
  std::vector<CorpusEntry> out;
  int counter = 0;
  int last_size = 0;
  EnumerateTrees(max_edges, [&](const EmbeddedGraph& g) {
    int size = static_cast<int>(g.num_edges());
    if (size != last_size) counter = 0;
    last_size = size;
    out.push_back({"tree(" + std::to_string(size) + "#" + std::to_string(++counter) + ")", g});
  }, std::max(max_edges, 11));
  return out;
}

std::vector<CorpusEntry> CorpusFromJson(const nlohmann::json& j) {
  const nlohmann::json* items = &j;
  if (j.is_object() && j.contains("edges")) return {{"graph-1", GraphFromJson(j)}};
  if (j.is_object()) {
    if (!j.contains("graphs")) {
      throw CyclesError(ErrorCode::kParse, "malformed", "corpus object needs \"graphs\"");
    }
    items = &j["graphs"];
  }
  if (!items->is_array()) {
    throw CyclesError(ErrorCode::kParse, "malformed", "corpus must be an array");
  }
  std::vector<CorpusEntry> out;
  for (size_t i = 0; i < items->size(); ++i) {
    const nlohmann::json& item = (*items)[i];
    if (item.is_object() && item.contains("graph")) {
      std::string name = item.value("name", "graph-" + std::to_string(i + 1));
      out.push_back({name, GraphFromJson(item["graph"])});
    } else {
      out.push_back({"graph-" + std::to_string(i + 1), GraphFromJson(item)});
    }
  }
  return out;
}

std::string CorpusDigest(const std::vector<CorpusEntry>& corpus) {
  std::string text;
  for (const CorpusEntry& e : corpus) text += e.name + "\n" + GraphDigest(e.graph) + "\n";
  return Fnv(text);
}

ScanReport ScanCorpus(const std::vector<CorpusEntry>& corpus, const ScanOptions& options) {
  ScanReport report;
  report.corpus_digest = CorpusDigest(corpus);
  report.corpus_size = corpus.size();
  report.threshold = options.threshold;

  std::vector<ScanRecord> done;
  if (!options.checkpoint_path.empty()) {
    done = LoadCheckpoint(options.checkpoint_path, report.corpus_digest, corpus.size());
  }
  std::vector<bool> finished(corpus.size(), false);
  for (const ScanRecord& r : done) finished[r.index] = true;
  std::vector<size_t> pending;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (!finished[i]) pending.push_back(i);
  }
  if (options.max_graphs > 0 && pending.size() > options.max_graphs) {
    pending.resize(options.max_graphs);
  }

  const size_t batch = std::max<size_t>(1, options.batch_size);
  const int workers = std::max(1, options.workers);
  for (size_t start = 0; start < pending.size(); start += batch) {
    const size_t stop = std::min(pending.size(), start + batch);
    std::vector<ScanRecord> results(stop - start);
    std::atomic<size_t> next{start};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
      for (;;) {
        size_t k = next.fetch_add(1);
        if (k >= stop) return;
        try {
          results[k - start] = ScanOne(corpus[pending[k]], pending[k], options);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const int n = std::min<int>(workers, static_cast<int>(stop - start));
    if (n <= 1) {
      work();
    } else {
      std::vector<std::thread> threads;
      for (int t = 0; t < n; ++t) threads.emplace_back(work);
      for (std::thread& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    for (ScanRecord& r : results) done.push_back(std::move(r));
    if (!options.checkpoint_path.empty()) {
      SaveCheckpoint(options.checkpoint_path, report.corpus_digest, done);
    }
  }

  report.complete = done.size() == corpus.size();
  report.records = std::move(done);
  Summarize(report);
  return report;
}

nlohmann::json RecordToJson(const ScanRecord& r) {
  return {{"index", r.index},
          {"name", r.name},
          {"digest", r.digest},
          {"size", r.size},
          {"markable", r.markable},
          {"twoConnected", r.two_connected},
          {"status", r.status},
          {"grundy", r.grundy ? nlohmann::json(*r.grundy) : nlohmann::json(nullptr)},
          {"nodes", r.nodes},
          {"parityViolation", r.parity_violation},
          {"highGrundy", r.high_grundy},
          {"reverified", r.reverified}};
}

ScanRecord RecordFromJson(const nlohmann::json& j) {
  ScanRecord r;
  r.index = j.at("index").get<size_t>();
  r.name = j.at("name").get<std::string>();
  r.digest = j.at("digest").get<std::string>();
  r.size = j.at("size").get<int>();
  r.markable = j.at("markable").get<int>();
  r.two_connected = j.at("twoConnected").get<bool>();
  r.status = j.at("status").get<std::string>();
  if (!j.at("grundy").is_null()) r.grundy = j.at("grundy").get<int>();
  r.nodes = j.at("nodes").get<uint64_t>();
  r.parity_violation = j.at("parityViolation").get<bool>();
  r.high_grundy = j.at("highGrundy").get<bool>();
  r.reverified = j.at("reverified").get<bool>();
  return r;
}

nlohmann::json SummaryToJson(const ScanReport& report) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [size, row] : report.histogram) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [g, c] : row) counts[std::to_string(g)] = c;
    hist[std::to_string(size)] = std::move(counts);
  }
  nlohmann::json flagged = nlohmann::json::array();
  for (const ScanRecord& r : report.records) {
    if (r.parity_violation || r.high_grundy) flagged.push_back(r.name);
  }
  return {{"corpusDigest", report.corpus_digest},
          {"corpusSize", report.corpus_size},
          {"scanned", report.records.size()},
          {"complete", report.complete},
          {"threshold", report.threshold},
          {"histogram", std::move(hist)},
          {"budgetExceeded", report.budget_exceeded},
          {"parityViolations", report.parity_violations},
          {"parityViolationsTwoConnected", report.parity_violations_two_connected},
          {"highGrundy", report.high_grundy},
          {"maxGrundy", report.max_grundy},
          {"flagged", std::move(flagged)}};
}

std::string ReportJsonl(const ScanReport& report) {
  std::string out;
  for (const ScanRecord& r : report.records) out += RecordToJson(r).dump() + "\n";
  return out;
}

}  // namespace cycles
