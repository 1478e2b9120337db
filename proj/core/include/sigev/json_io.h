// Copyright 2026 The sigev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and text serialization. Numbers written by this library are rounded
// to 12 significant digits so that outputs diff cleanly.

#ifndef SIGEV_JSON_IO_H_
#define SIGEV_JSON_IO_H_

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "sigev/detector.h"
#include "sigev/equilibrium.h"
#include "sigev/game.h"
#include "sigev/numeric.h"

namespace sigev {

using Json = nlohmann::json;

// printf "%.12g", with negative zero printed as 0.
std::string FormatNumber(double x);
// x rounded to 12 significant digits.
double Round12(double x);

// All readers throw ValidationError on malformed documents.
GameSpec GameSpecFromJson(const Json& j);
Json ToJson(const GameSpec& spec);

SolveOptions SolveOptionsFromJson(const Json& j);

struct TimingSpec {
  TimingModel model;
  std::optional<Threshold> threshold;
};
TimingSpec TimingSpecFromJson(const Json& j);

Json ToJson(const Equilibrium& eq, const GameSpec& spec);
// Strategies are required. Missing beliefs are completed as in
// CompleteEquilibrium when possible; missing utilities are computed.
Equilibrium EquilibriumFromJson(const Json& j, const GameSpec& spec);

Json ToJson(const Verdict& v);

// Parses a file; throws ValidationError when unreadable or malformed.
Json ReadJsonFile(const std::string& path);

}  // namespace sigev

#endif  // SIGEV_JSON_IO_H_
