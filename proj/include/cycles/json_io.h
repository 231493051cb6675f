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

#ifndef CYCLES_JSON_IO_H_
#define CYCLES_JSON_IO_H_

#include <memory>
#include <string>

#include "json.hpp"

#include "cycles/game.h"
#include "cycles/graph.h"
#include "cycles/solver.h"

namespace cycles {

using Json = nlohmann::json;

// Graph JSON: {"vertices":[..],"edges":[{"id","u","v"}..],"cells":[[..]..],
// "special":[..]} or "rotation"/"outer" in place of "cells". Unknown keys
// (such as "layout") are ignored. Throws kParse on shape errors.
GraphDescription GraphDescriptionFromJson(const Json& j);
EmbeddedGraph GraphFromJson(const Json& j);
Json GraphToJson(const EmbeddedGraph& g);

// Position JSON is graph JSON plus "orientation": {"e1":"uv","e2":null,..}.
// Missing edges are undirected.
Position PositionFromJson(const Json& j);
Json PositionToJson(const Position& p);

Json MoveToJson(const EmbeddedGraph& g, const Move& m);
Move MoveFromJson(const EmbeddedGraph& g, const Json& j);

Json ReportToJson(const EmbeddedGraph& g, const AnalysisReport& r);

// Parses text, mapping syntax errors to CyclesError(kParse).
Json ParseJson(const std::string& text);

// FNV-1a over the compact dump of GraphToJson, as 16 hex digits.
std::string GraphDigest(const EmbeddedGraph& g);

}  // namespace cycles

#endif  // CYCLES_JSON_IO_H_
