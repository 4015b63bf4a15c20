// Copyright 2026 The qgame Authors
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

// JSON encodings.
//
//   game:     {"n": int, "u1": [[float]], "u2": [[float]]}
//   state:    {"dim": int, "basis": [[[re, im], ...], ...], "weights": [[float]]}
//             basis[i] lists the amplitudes of |psi_i>. A basis file is a
//             state without "weights".
//   density:  {"dimA": int, "dimB": int, "entries": [[[re, im], ...], ...]}
//   report:   {"qa_side1", "qa_side2", "guaranteed", "replacements_side1",
//              "replacements_side2", "lemma2_holds", "m_rank"}
//   optimum:  {"qa", "side", "best_p", "assignment", "bound", "x"}
//
// Decoders throw InvalidInput on malformed or invalid documents.

#ifndef QGAME_IO_H_
#define QGAME_IO_H_

#include <string>

#include "json.hpp"
#include "qgame/advantage.h"
#include "qgame/games.h"
#include "qgame/optimizer.h"
#include "qgame/states.h"

namespace qgame {

using Json = nlohmann::ordered_json;

Json ToJson(const BimatrixGame& game);
BimatrixGame GameFromJson(const Json& j);

Json ToJson(const ZeroDiscordState& s);
ZeroDiscordState StateFromJson(const Json& j);
OrthonormalBasis BasisFromJson(const Json& j);

Json ToJson(const DensityMatrix& rho);
DensityMatrix DensityFromJson(const Json& j);

Json ToJson(const AdvantageReport& r);
AdvantageReport ReportFromJson(const Json& j);

Json ToJson(const OptimizationResult& r);
// Restores the schema fields only (qa, side, best_p, assignment, bound, x).
OptimizationResult OptimizationFromJson(const Json& j);

Json ParseJson(const std::string& text);
Json ReadJsonFile(const std::string& path);

}  // namespace qgame

#endif  // QGAME_IO_H_
