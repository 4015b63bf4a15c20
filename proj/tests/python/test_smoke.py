# Copyright 2026 The qgame Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracle  # pylint: disable=g-import-not-at-top
import qgame  # pylint: disable=g-import-not-at-top


def _state(name):
  doc = json.loads(qgame.builtin_state(name))
  kets = [[complex(re, im) for re, im in ket] for ket in doc["basis"]]
  return kets, doc["weights"]


def test_n3_matches_brute_force():
  kets, weights = _state("n3")
  report = qgame.advantage_report(kets, weights)
  assert report["qa_side1"] == pytest.approx(2 / 3, abs=1e-12)
  assert report["qa_side1"] == pytest.approx(
      oracle.best_replacement(kets, weights, "U1"), abs=1e-12)
  assert report["qa_side2"] == pytest.approx(
      oracle.best_replacement(kets, weights, "U2"), abs=1e-12)
  assert report["m_rank"] == 2


def test_symmetrized_alternative_matches_brute_force():
  kets, weights = _state("n3alt")
  report = qgame.advantage_report(kets, weights)
  assert report["qa_side1"] == pytest.approx(
      oracle.best_replacement(kets, weights, "U1"), abs=1e-12)
  assert report["qa_side2"] == pytest.approx(
      oracle.best_replacement(kets, weights, "U2"), abs=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_random_bases(n):
  rng = np.random.default_rng(100 + n)
  for _ in range(10):
    kets = oracle.haar_unitary(n, rng).T.tolist()
    assert np.allclose(qgame.overlap_matrix(kets), oracle.overlap(kets),
                       atol=1e-14)
    weights = np.full((n, n), 1 / n**2).tolist()
    report = qgame.advantage_report(kets, weights)
    assert report["guaranteed"] <= 1e-8
    assert report["qa_side1"] == pytest.approx(
        oracle.best_replacement(kets, weights, "U1"), abs=1e-9)


def test_optimizer_point_is_feasible_and_consistent():
  kets, _ = _state("n3")
  for side in ("U1", "U2"):
    result = qgame.optimize_weights(kets, side)
    assert result["exact_qa"] == "2/3"
    p = np.array(result["best_p"])
    m = oracle.overlap(kets)
    assert np.allclose(m @ p @ m.T, np.full((3, 3), 1 / 9), atol=1e-12)
    assert np.allclose(p, p.T) and p.min() >= 0
    assert result["qa"] == pytest.approx(
        oracle.best_replacement(kets, p, side), abs=1e-12)


def test_rank_two_bound_and_equilibrium():
  bound, x = qgame.rank_two_bound([[.5, .5, 0], [.5, .5, 0], [0, 0, 1]])
  assert bound == pytest.approx(2 / 3) and x == 0
  unique, witness = qgame.ce_polytope_unique(3)
  assert unique
  assert all(v == "1/9" for row in witness for v in row)
  u1, u2 = qgame.dice_game(3)
  assert np.array_equal(u1, oracle.dice_game(3)[0])
  assert np.array_equal(u2, oracle.dice_game(3)[1])


def test_witness_matches_closed_form():
  plus = np.array([1, 1]) / np.sqrt(2)
  minus = np.array([1, -1]) / np.sqrt(2)
  e0, e1 = np.eye(2)
  rho = sum(np.kron(np.outer(a, a), np.outer(b, b))
            for a, b in [(plus, e0), (e0, plus), (minus, e1), (e1, minus)]) / 4
  value = qgame.cq_witness(rho.astype(complex).tolist(), 2, 2)
  assert value == pytest.approx(oracle.witness_closed_form(rho), abs=1e-9)
  assert value == pytest.approx(1 / np.sqrt(32), abs=1e-9)


def test_errors_are_value_errors():
  with pytest.raises(ValueError):
    qgame.advantage_report([[1, 0], [1, 0]], [[.25, .25], [.25, .25]])
  with pytest.raises(qgame.Error):
    qgame.optimize_weights(np.eye(6).tolist())


def test_cli_through_bindings():
  code, doc = qgame.cli_json("advantage", "--builtin", "n3")
  assert code == 0
  kets, weights = _state("n3")
  assert doc["qa_side2"] == pytest.approx(
      oracle.best_replacement(kets, weights, "U2"), abs=1e-12)
  code, doc = qgame.cli_json("scan", "--n", "3", "--samples", "20")
  assert code == 0 and doc["exceedances"] == 0


@pytest.mark.skipif("QGAME_CLI" not in os.environ, reason="CLI path not set")
def test_cli_binary():
  cli = os.environ["QGAME_CLI"]
  assert subprocess.run([cli, "reproduce"], capture_output=True).returncode == 0
  fault = subprocess.run([cli, "reproduce", "--inject-fault"],
                         capture_output=True)
  assert fault.returncode == 1
  out = subprocess.run([cli, "witness", "--builtin", "discord-rotated"],
                       capture_output=True, text=True, check=True).stdout
  assert json.loads(out)["verdict"] == "POSITIVE-DISCORD"
