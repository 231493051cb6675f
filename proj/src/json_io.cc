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

#include "cycles/json_io.h"

#include <cstdio>

#include "cycles/error.h"

namespace cycles {
namespace {

[[noreturn]] void BadShape(const std::string& what) {
  throw CyclesError(ErrorCode::kParse, "malformed", what);
}

std::vector<std::string> StringList(const Json& j, const char* field) {
  if (!j.is_array()) BadShape(std::string("\"") + field + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const Json& x : j) {
    if (x.is_string()) {
      out.push_back(x.get<std::string>());
    } else if (x.is_number_integer()) {
      out.push_back(std::to_string(x.get<long long>()));
    } else {
      BadShape(std::string("\"") + field + "\" entries must be strings");
    }
  }
  return out;
}

std::string IdString(const Json& x, const char* field) {
  if (x.is_string()) return x.get<std::string>();
  if (x.is_number_integer()) return std::to_string(x.get<long long>());
  BadShape(std::string("\"") + field + "\" must be a string id");
}

}  // namespace

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CyclesError(ErrorCode::kParse, "malformed", e.what());
  }
}

GraphDescription GraphDescriptionFromJson(const Json& j) {
  if (!j.is_object()) BadShape("graph must be a JSON object");
  GraphDescription d;
  if (!j.contains("vertices")) BadShape("missing \"vertices\"");
  d.vertices = StringList(j["vertices"], "vertices");
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) BadShape("\"edges\" must be an array");
    for (const Json& e : j["edges"]) {
      if (!e.is_object() || !e.contains("id") || !e.contains("u") || !e.contains("v")) {
        BadShape("edges need \"id\", \"u\" and \"v\"");
      }
      d.edges.push_back(RawEdge{IdString(e["id"], "id"), IdString(e["u"], "u"),
                                IdString(e["v"], "v")});
    }
  }
  if (j.contains("cells")) {
    if (!j["cells"].is_array()) BadShape("\"cells\" must be an array");
    std::vector<std::vector<std::string>> cells;
    for (const Json& c : j["cells"]) cells.push_back(StringList(c, "cells"));
    d.cells = std::move(cells);
  } else if (j.contains("rotation")) {
    if (!j["rotation"].is_object()) BadShape("\"rotation\" must be an object");
    std::map<std::string, std::vector<std::string>> rot;
    for (auto it = j["rotation"].begin(); it != j["rotation"].end(); ++it) {
      rot[it.key()] = StringList(it.value(), "rotation");
    }
    d.rotation = std::move(rot);
    if (!j.contains("outer") || !j["outer"].is_number_integer()) {
      BadShape("\"rotation\" requires an integer \"outer\"");
    }
    d.outer = j["outer"].get<int>();
  }
  if (j.contains("special")) d.special = StringList(j["special"], "special");
  return d;
}

EmbeddedGraph GraphFromJson(const Json& j) {
  return EmbeddedGraph::FromDescription(GraphDescriptionFromJson(j));
}

Json GraphToJson(const EmbeddedGraph& g) {
  Json j;
  j["vertices"] = g.vertex_ids();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"u", g.vertex_id(e.u)}, {"v", g.vertex_id(e.v)}});
  }
  j["edges"] = std::move(edges);
  Json cells = Json::array();
  for (const Cell& c : g.cells()) {
    Json cell = Json::array();
    for (int v : c.vertices) cell.push_back(g.vertex_id(v));
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  Json special = Json::array();
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.is_special(static_cast<int>(v))) special.push_back(g.vertex_id(static_cast<int>(v)));
  }
  j["special"] = std::move(special);
  return j;
}

Position PositionFromJson(const Json& j) {
  auto board = std::make_shared<const Board>(GraphFromJson(j));
  const EmbeddedGraph& g = board->graph();
  uint32_t directed = 0;
  uint32_t forward = 0;
  if (j.contains("orientation")) {
    const Json& o = j["orientation"];
    if (!o.is_object()) BadShape("\"orientation\" must be an object");
    for (auto it = o.begin(); it != o.end(); ++it) {
      auto e = g.FindEdge(it.key());
      if (!e) BadShape("orientation names unknown edge '" + it.key() + "'");
      if (it.value().is_null()) continue;
      if (!it.value().is_string()) BadShape("orientation values are \"uv\", \"vu\" or null");
      std::string dir = it.value().get<std::string>();
      if (dir != "uv" && dir != "vu") BadShape("orientation values are \"uv\", \"vu\" or null");
      directed |= uint32_t{1} << *e;
      if (dir == "uv") forward |= uint32_t{1} << *e;
    }
  }
  return Position(std::move(board), Board::Pack(directed, forward));
}

Json PositionToJson(const Position& p) {
  Json j = GraphToJson(p.graph());
  Json o = Json::object();
  for (size_t e = 0; e < p.graph().num_edges(); ++e) {
    const std::string& id = p.graph().edge(static_cast<int>(e)).id;
    if (p.directed(static_cast<int>(e))) {
      o[id] = std::string(DirectionName(p.direction(static_cast<int>(e))));
    } else {
      o[id] = nullptr;
    }
  }
  j["orientation"] = std::move(o);
  return j;
}

Json MoveToJson(const EmbeddedGraph& g, const Move& m) {
  return {{"edge", g.edge(m.edge).id}, {"dir", std::string(DirectionName(m.dir))}};
}

Move MoveFromJson(const EmbeddedGraph& g, const Json& j) {
  if (!j.is_object() || !j.contains("edge") || !j.contains("dir") || !j["dir"].is_string()) {
    BadShape("move needs \"edge\" and \"dir\"");
  }
  return MakeMove(g, IdString(j["edge"], "edge"), j["dir"].get<std::string>());
}

Json ReportToJson(const EmbeddedGraph& g, const AnalysisReport& r) {
  Json moves = Json::array();
  for (const MoveReport& m : r.moves) {
    moves.push_back({{"edge", g.edge(m.move.edge).id},
                     {"dir", std::string(DirectionName(m.move.dir))},
                     {"childGrundy", m.child_grundy},
                     {"winning", m.winning}});
  }
  return {{"grundy", r.grundy},
          {"winner", r.winner == Winner::kFirst ? "first" : "second"},
          {"moves", std::move(moves)},
          {"nodes", r.nodes},
          {"millis", r.millis}};
}

std::string GraphDigest(const EmbeddedGraph& g) {
  std::string text = GraphToJson(g).dump();
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cycles
