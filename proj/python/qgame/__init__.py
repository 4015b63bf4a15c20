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

"""Quantum dice games on shared zero-discord states."""

import json

from qgame._core import (
    Error,
    advantage_report,
    builtin_state,
    ce_polytope_unique,
    cq_witness,
    dice_game,
    optimize_weights,
    overlap_matrix,
    rank_two_bound,
    run_cli,
)

__all__ = [
    "Error",
    "advantage_report",
    "builtin_state",
    "ce_polytope_unique",
    "cli_json",
    "cq_witness",
    "dice_game",
    "optimize_weights",
    "overlap_matrix",
    "rank_two_bound",
    "run_cli",
]


def cli_json(*args):
    """Runs the command line with JSON output and returns (exit code, parsed)."""
    code, out, _ = run_cli(list(args))
    return code, (json.loads(out) if out.strip() else None)
