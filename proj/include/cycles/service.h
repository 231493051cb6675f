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

#ifndef CYCLES_SERVICE_H_
#define CYCLES_SERVICE_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "cycles/game.h"
#include "cycles/solver.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace cycles {

struct ServiceOptions {
  // Per-request node budget for /api/analyze; exhaustion answers 503.
  uint64_t node_budget = 20'000'000;
  std::string cors_origin = "*";
  // Analyze reports kept in the shared cache; 0 disables caching.
  size_t cache_entries = 4096;
};

struct HttpResponse {
  int status = 200;
  std::string body;  // always JSON
};

// Request handlers, independent of the transport so they can be exercised
// directly. Safe to call concurrently.
class AnalysisService {
 public:
  explicit AnalysisService(ServiceOptions options = {});

  // Body: position JSON.
  HttpResponse Analyze(const std::string& body);
  // Body: {"position": ..., "move": {"edge": ..., "dir": ...}}.
  HttpResponse ApplyMove(const std::string& body);
  HttpResponse Families() const;
  HttpResponse Family(const std::string& name,
                      const std::map<std::string, std::string>& query) const;
  HttpResponse Health() const;

  const ServiceOptions& options() const { return options_; }

 private:
  ServiceOptions options_;
  std::mutex cache_mu_;
  // (graph digest, orientation word) -> serialized report.
  std::map<std::pair<std::string, Word>, std::string> cache_;
};

// Maps a thrown error to its status: 400 malformed input, 404 unknown family,
// 409 invalid position, 422 illegal move, 503 budget exceeded.
int StatusFor(const std::exception& e);

// Installs the routes, CORS headers and preflight handling on `server`.
void RegisterRoutes(httplib::Server& server, AnalysisService& service);

// Blocks serving on host:port. Returns false if the socket cannot be bound.
bool Serve(AnalysisService& service, const std::string& host, int port);

}  // namespace cycles

#endif  // CYCLES_SERVICE_H_
