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

#include "cycles/service.h"

#include <memory>
#include <string>

#include "cycles/error.h"
#include "cycles/families.h"
#include "cycles/json_io.h"
#include "cycles/version.h"
#include "httplib.h"

namespace cycles {
namespace {

HttpResponse Ok(const Json& j) { return {200, j.dump()}; }

HttpResponse ErrorResponse(const std::exception& e) {
  Json j;
  if (const auto* ce = dynamic_cast<const CyclesError*>(&e)) {
    j["error"] = std::string(ErrorCodeName(ce->code()));
    j["reason"] = ce->reason();
  } else {
    j["error"] = "internal";
    j["reason"] = "internal";
  }
  j["message"] = e.what();
  return {StatusFor(e), j.dump()};
}

template <typename Fn>
HttpResponse Guard(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return ErrorResponse(e);
  }
}

Json IllegalOptions(const Position& p) {
  Json out = Json::array();
  const Board& board = p.board();
  for (int e = 0; e < board.num_edges(); ++e) {
    if (p.directed(e)) continue;
    for (Direction d : {Direction::kUV, Direction::kVU}) {
      Move m{e, d};
      if (auto why = board.Check(p.word(), m)) {
        Json item = MoveToJson(p.graph(), m);
        item["reason"] = std::string(IllegalReasonName(*why));
        out.push_back(std::move(item));
      }
    }
  }
  return out;
}

}  // namespace

int StatusFor(const std::exception& e) {
  const auto* ce = dynamic_cast<const CyclesError*>(&e);
  if (ce == nullptr) return 500;
  switch (ce->code()) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidGraph:
    case ErrorCode::kOutOfRange:
      return 400;
    case ErrorCode::kUnknownFamily:
      return 404;
    case ErrorCode::kInvalidPosition:
      return 409;
    case ErrorCode::kIllegalMove:
      return 422;
    case ErrorCode::kBudgetExceeded:
      return 503;
    default:
      return 500;
  }
}

AnalysisService::AnalysisService(ServiceOptions options) : options_(std::move(options)) {}

HttpResponse AnalysisService::Analyze(const std::string& body) {
  return Guard([&] {
    Position p = PositionFromJson(ParseJson(body));
    auto key = std::make_pair(GraphDigest(p.graph()), p.word());
    if (options_.cache_entries > 0) {
      std::lock_guard<std::mutex> lock(cache_mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return HttpResponse{200, it->second};
    }
    SolverOptions so;
    so.node_budget = options_.node_budget;
    Json j = ReportToJson(p.graph(), cycles::Analyze(p, so));
    j["illegal"] = IllegalOptions(p);
    std::string text = j.dump();
    if (options_.cache_entries > 0) {
      std::lock_guard<std::mutex> lock(cache_mu_);
      if (cache_.size() < options_.cache_entries) cache_.emplace(key, text);
    }
    return HttpResponse{200, std::move(text)};
  });
}

HttpResponse AnalysisService::ApplyMove(const std::string& body) {
  return Guard([&] {
    Json j = ParseJson(body);
    if (!j.is_object() || !j.contains("position") || !j.contains("move")) {
      throw CyclesError(ErrorCode::kParse, "malformed", "body needs \"position\" and \"move\"");
    }
    Position p = PositionFromJson(j["position"]);
    Move m = MoveFromJson(p.graph(), j["move"]);
    return Ok(PositionToJson(cycles::ApplyMove(p, m)));
  });
}

HttpResponse AnalysisService::Families() const {
  return Guard([&] {
    Json list = Json::array();
    for (const FamilyInfo& f : FamilyCatalog()) {
      list.push_back(
          {{"name", f.name}, {"parameters", f.parameters}, {"description", f.description}});
    }
    return Ok({{"version", CatalogData().at("version")}, {"families", std::move(list)}});
  });
}

HttpResponse AnalysisService::Family(const std::string& name,
                                     const std::map<std::string, std::string>& query) const {
  return Guard([&] { return Ok(GraphToJson(Generate(FamilySpecFromParams(name, query)))); });
}

HttpResponse AnalysisService::Health() const {
  return Ok({{"status", "ok"}, {"version", kVersion}});
}

void RegisterRoutes(httplib::Server& server, AnalysisService& service) {
  const std::string origin = service.options().cors_origin;
  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  auto send = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.Post("/api/analyze", [&service, send](const httplib::Request& req,
                                               httplib::Response& res) {
    send(res, service.Analyze(req.body));
  });
  server.Post("/api/move", [&service, send](const httplib::Request& req,
                                            httplib::Response& res) {
    send(res, service.ApplyMove(req.body));
  });
  server.Get("/api/families", [&service, send](const httplib::Request&,
                                               httplib::Response& res) {
    send(res, service.Families());
  });
  server.Get(R"(/api/families/([A-Za-z0-9_]+))",
             [&service, send](const httplib::Request& req, httplib::Response& res) {
               std::map<std::string, std::string> query;
               for (const auto& [k, v] : req.params) query[k] = v;
               send(res, service.Family(req.matches[1], query));
             });
  server.Get("/api/health", [&service, send](const httplib::Request&, httplib::Response& res) {
    send(res, service.Health());
  });
}

bool Serve(AnalysisService& service, const std::string& host, int port) {
  httplib::Server server;
  RegisterRoutes(server, service);
  return server.listen(host, port);
}

}  // namespace cycles
