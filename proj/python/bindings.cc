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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qgame/advantage.h"
#include "qgame/cli.h"
#include "qgame/games.h"
#include "qgame/io.h"
#include "qgame/optimizer.h"
#include "qgame/states.h"

namespace py = pybind11;

namespace qgame {
namespace {

using Rows = std::vector<std::vector<double>>;
using ComplexRows = std::vector<std::vector<Complex>>;

Rows ToRows(const RealMatrix& m) {
  Rows r(m.rows());
  for (int i = 0; i < m.rows(); ++i) r[i].assign(m.row(i).begin(), m.row(i).end());
  return r;
}

// kets[i] holds the amplitudes of |psi_i>.
OrthonormalBasis BasisFromKets(const ComplexRows& kets) {
  return OrthonormalBasis(ComplexMatrix::FromRows(kets).Transpose());
}

py::dict ReportDict(const AdvantageReport& r) {
  py::dict d;
  d["qa_side1"] = r.qa_side1;
  d["qa_side2"] = r.qa_side2;
  d["guaranteed"] = r.guaranteed;
  d["replacements_side1"] = r.replacements_side1;
  d["replacements_side2"] = r.replacements_side2;
  d["lemma2_holds"] = r.lemma2_holds;
  d["m_rank"] = r.m_rank;
  return d;
}

}  // namespace
}  // namespace qgame

PYBIND11_MODULE(_core, m) {
  using namespace qgame;
  m.doc() = "Quantum dice games on shared zero-discord states";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = RunCli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");

  m.def("dice_game", [](int n) {
    const BimatrixGame g = DiceGame(n);
    return py::make_tuple(ToRows(g.u1()), ToRows(g.u2()));
  }, py::arg("n"));

  m.def("builtin_state", [](const std::string& name) {
    const ReferenceStates refs = MakeReferenceStates();
    const ZeroDiscordState* s = nullptr;
    if (name == "n3") s = &refs.n3_zero_discord;
    if (name == "n3alt") s = &refs.n3_alternative;
    if (!s) throw InvalidInput("unknown zero-discord builtin '" + name + "'");
    return ToJson(*s).dump();
  }, py::arg("name"), "State JSON of a built-in zero-discord state.");

  m.def("overlap_matrix", [](const ComplexRows& kets) {
    return ToRows(OverlapMatrix(BasisFromKets(kets)));
  }, py::arg("kets"));

  m.def("advantage_report", [](const ComplexRows& kets, const Rows& weights, double tol) {
    const ZeroDiscordState s(BasisFromKets(kets), WeightMatrix(RealMatrix::FromRows(weights)));
    return ReportDict(MakeAdvantageReport(s, DiceGame(s.dim()), tol));
  }, py::arg("kets"), py::arg("weights"), py::arg("tol") = 1e-9);

  m.def("optimize_weights", [](const ComplexRows& kets, const std::string& side) {
    const OptimizationResult r = OptimizeWeights(BasisFromKets(kets), ParseSide(side));
    py::dict d;
    d["qa"] = r.qa;
    d["side"] = ToString(r.side);
    d["best_p"] = ToRows(r.best_p);
    d["assignment"] = r.assignment;
    d["bound"] = r.bound ? py::cast(*r.bound) : py::none();
    d["x"] = r.x ? py::cast(*r.x) : py::none();
    d["exact_qa"] = r.exact_qa ? py::cast(ToString(*r.exact_qa)) : py::none();
    return d;
  }, py::arg("kets"), py::arg("side") = "U1");

  m.def("rank_two_bound", [](const Rows& mat, double tol) {
    const RankTwoDependency d = RankTwoBound(RealMatrix::FromRows(mat), tol);
    return py::make_tuple(d.bound, d.x);
  }, py::arg("m"), py::arg("tol") = 1e-9);

  m.def("ce_polytope_unique", [](int n) {
    const UniqueEquilibrium u = CePolytopeUnique(DiceGame(n));
    std::vector<std::vector<std::string>> w;
    if (u.witness) {
      for (int i = 0; i < u.witness->rows(); ++i) {
        w.emplace_back();
        for (int j = 0; j < u.witness->cols(); ++j) w.back().push_back(ToString((*u.witness)(i, j)));
      }
    }
    return py::make_tuple(u.unique, w);
  }, py::arg("n"), "(unique, witness entries as exact fraction strings)");

  m.def("cq_witness", [](const ComplexRows& entries, int dim_a, int dim_b, int grid) {
    return CqWitness(DensityMatrix(ComplexMatrix::FromRows(entries), dim_a, dim_b),
                     kDefaultTol, grid);
  }, py::arg("entries"), py::arg("dim_a"), py::arg("dim_b"),
     py::arg("grid") = kDefaultWitnessGrid);
}
