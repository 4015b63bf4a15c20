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

#include "qgame/io.h"

#include <fstream>
#include <sstream>

namespace qgame {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) {
    throw InvalidInput(std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

double Number(const Json& v, const char* what) {
  if (!v.is_number()) throw InvalidInput(std::string(what) + " must be numeric");
  return v.get<double>();
}

Json RealToJson(const RealMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

RealMatrix RealFromJson(const Json& v, int rows, int cols, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows) {
    throw InvalidInput(std::string(what) + " has the wrong number of rows");
  }
  RealMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != cols) {
      throw InvalidInput(std::string(what) + " has the wrong number of columns");
    }
    for (int j = 0; j < cols; ++j) m(i, j) = Number(v[i][j], what);
  }
  return m;
}

Json ComplexToJson(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex ComplexFromJson(const Json& v, const char* what) {
  if (!v.is_array() || v.size() != 2) {
    throw InvalidInput(std::string(what) + " entries must be [re, im]");
  }
  return {Number(v[0], what), Number(v[1], what)};
}

// rows x cols of [re, im] pairs.
ComplexMatrix ComplexFromJson(const Json& v, int rows, int cols, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows) {
    throw InvalidInput(std::string(what) + " has the wrong number of rows");
  }
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != cols) {
      throw InvalidInput(std::string(what) + " has the wrong number of columns");
    }
    for (int j = 0; j < cols; ++j) m(i, j) = ComplexFromJson(v[i][j], what);
  }
  return m;
}

Json IntsToJson(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

std::vector<int> IntsFromJson(const Json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) {
      throw InvalidInput(std::string(what) + " entries must be integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

int PositiveDim(const Json& j, const char* key) {
  const int n = IntField(j, key);
  if (n < 1) throw InvalidInput(std::string(key) + " must be positive");
  return n;
}

}  // namespace

Json ToJson(const BimatrixGame& game) {
  Json j;
  j["n"] = game.n();
  j["u1"] = RealToJson(game.u1());
  j["u2"] = RealToJson(game.u2());
  return j;
}

BimatrixGame GameFromJson(const Json& j) {
  const int n = PositiveDim(j, "n");
  return BimatrixGame(RealFromJson(Field(j, "u1"), n, n, "u1"),
                      RealFromJson(Field(j, "u2"), n, n, "u2"));
}

Json ToJson(const ZeroDiscordState& s) {
  const int n = s.dim();
  Json basis = Json::array();
  for (int i = 0; i < n; ++i) {
    Json ket = Json::array();
    for (int k = 0; k < n; ++k) ket.push_back(ComplexToJson(s.basis().matrix()(k, i)));
    basis.push_back(std::move(ket));
  }
  Json j;
  j["dim"] = n;
  j["basis"] = std::move(basis);
  j["weights"] = RealToJson(s.weights().p());
  return j;
}

OrthonormalBasis BasisFromJson(const Json& j) {
  const int n = PositiveDim(j, "dim");
  // Rows of the document are kets; the basis stores them as columns.
  const ComplexMatrix rows = ComplexFromJson(Field(j, "basis"), n, n, "basis");
  return OrthonormalBasis(rows.Transpose());
}

ZeroDiscordState StateFromJson(const Json& j) {
  const int n = PositiveDim(j, "dim");
  return ZeroDiscordState(BasisFromJson(j),
                          WeightMatrix(RealFromJson(Field(j, "weights"), n, n, "weights")));
}

Json ToJson(const DensityMatrix& rho) {
  Json entries = Json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < rho.dim(); ++k) row.push_back(ComplexToJson(rho.rho()(i, k)));
    entries.push_back(std::move(row));
  }
  Json j;
  j["dimA"] = rho.dim_a();
  j["dimB"] = rho.dim_b();
  j["entries"] = std::move(entries);
  return j;
}

DensityMatrix DensityFromJson(const Json& j) {
  const int a = PositiveDim(j, "dimA");
  const int b = PositiveDim(j, "dimB");
  if (a > 64 || b > 64 || a * b > 64) {
    throw InvalidInput("density matrix dimension exceeds 64");
  }
  return DensityMatrix(ComplexFromJson(Field(j, "entries"), a * b, a * b, "entries"),
                       a, b);
}

Json ToJson(const AdvantageReport& r) {
  Json j;
  j["qa_side1"] = r.qa_side1;
  j["qa_side2"] = r.qa_side2;
  j["guaranteed"] = r.guaranteed;
  j["replacements_side1"] = IntsToJson(r.replacements_side1);
  j["replacements_side2"] = IntsToJson(r.replacements_side2);
  j["lemma2_holds"] = r.lemma2_holds;
  j["m_rank"] = r.m_rank;
  return j;
}

AdvantageReport ReportFromJson(const Json& j) {
  AdvantageReport r;
  r.qa_side1 = Number(Field(j, "qa_side1"), "qa_side1");
  r.qa_side2 = Number(Field(j, "qa_side2"), "qa_side2");
  r.guaranteed = Number(Field(j, "guaranteed"), "guaranteed");
  r.replacements_side1 = IntsFromJson(Field(j, "replacements_side1"), "replacements_side1");
  r.replacements_side2 = IntsFromJson(Field(j, "replacements_side2"), "replacements_side2");
  const Json& holds = Field(j, "lemma2_holds");
  if (!holds.is_boolean()) throw InvalidInput("lemma2_holds must be boolean");
  r.lemma2_holds = holds.get<bool>();
  r.m_rank = IntField(j, "m_rank");
  return r;
}

Json ToJson(const OptimizationResult& r) {
  Json j;
  j["qa"] = r.qa;
  j["side"] = ToString(r.side);
  j["best_p"] = RealToJson(r.best_p);
  j["assignment"] = IntsToJson(r.assignment);
  j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
  j["x"] = r.x ? Json(*r.x) : Json(nullptr);
  return j;
}

OptimizationResult OptimizationFromJson(const Json& j) {
  OptimizationResult r;
  r.qa = Number(Field(j, "qa"), "qa");
  const Json& side = Field(j, "side");
  if (!side.is_string()) throw InvalidInput("side must be a string");
  r.side = ParseSide(side.get<std::string>());
  const Json& p = Field(j, "best_p");
  const int n = p.is_array() ? static_cast<int>(p.size()) : 0;
  r.best_p = RealFromJson(p, n, n, "best_p");
  r.assignment = IntsFromJson(Field(j, "assignment"), "assignment");
  const Json& bound = Field(j, "bound");
  if (!bound.is_null()) r.bound = Number(bound, "bound");
  const Json& x = Field(j, "x");
  if (!x.is_null()) r.x = Number(x, "x");
  return r;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str());
}

}  // namespace qgame
