# Copyright 2026 The Kubernetes Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import json
from pathlib import Path

import pytest

from ricci_idleness.config import PairMode, PairSelectionConfig
from ricci_idleness.errors import PairSelectionError
from ricci_idleness.graph import generate_from_spec
from ricci_idleness.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, collect_overrides, run_cli, select_pairs


def _stdout_json(capsys: pytest.CaptureFixture[str]) -> object:
    return json.loads(capsys.readouterr().out)


def test_curvature_on_cycle(capsys: pytest.CaptureFixture[str]) -> None:
    assert run_cli(["curvature", "--gen", "cycle:6", "--pair", "0,3", "--p", "0,1/2"]) == EXIT_OK
    rows = _stdout_json(capsys)
    assert [(r["p"], r["kappa"]) for r in rows] == [("0/1", "2/3"), ("1/2", "1/3")]
    assert rows[0]["distance"] == 3


def test_idleness_on_family(capsys: pytest.CaptureFixture[str]) -> None:
    assert run_cli(["idleness", "--gen", "family:1,1,0"]) == EXIT_OK
    (row,) = _stdout_json(capsys)
    assert (row["x"], row["y"], row["method"]) == ("x", "y", "profile")
    assert row["c"] == ["7/4", "3/2", "1/1"]
    assert row["critical_points"] == ["1/5", "1/3"]
    assert len(row["pieces"]) == 3


def test_idleness_on_adjacent_pair_samples(capsys: pytest.CaptureFixture[str]) -> None:
    assert run_cli(["idleness", "--gen", "complete:3", "--pair", "0,1"]) == EXIT_OK
    (row,) = _stdout_json(capsys)
    assert row["method"] == "sampling"
    assert row["critical_points"] == ["1/3"]


def test_lly_by_label(capsys: pytest.CaptureFixture[str]) -> None:
    assert run_cli(["lly", "--gen", "figure3", "--pair", "x,w"]) == EXIT_OK
    (row,) = _stdout_json(capsys)
    assert (row["x"], row["y"], row["distance"]) == ("x", "w", 1)


def test_verify_single_family(capsys: pytest.CaptureFixture[str]) -> None:
    assert run_cli(["verify", "family", "--m", "1", "--n", "1", "--k", "1"]) == EXIT_OK
    report = _stdout_json(capsys)
    assert isinstance(report, dict)
    assert report["suite"] == "family"
    assert report["passed"] is True


def test_gen_writes_graph(tmp_path: Path) -> None:
    out = tmp_path / "figure3.json"
    assert run_cli(["gen", "--gen", "figure3", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["n"] == 5
    assert data["labels"] == ["x", "w", "y", "z1", "z2"]


def test_csv_with_decimal_hints(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["curvature", "--gen", "cycle:6", "--pair", "0,3", "--p", "1/2", "--format", "csv", "--decimal-hint"]
    assert run_cli(argv) == EXIT_OK
    header, line = capsys.readouterr().out.splitlines()
    row = dict(zip(header.split(","), line.split(",")))
    assert row["kappa"] == "1/3"
    assert row["kappa_decimal"] == "0.333333333333"
    assert row["p_decimal"] == "0.5"


def test_idleness_csv_has_one_row_per_piece(capsys: pytest.CaptureFixture[str]) -> None:
    assert run_cli(["idleness", "--gen", "family:1,1,0", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split(",")[-4:] == ["from", "to", "slope", "intercept"]
    assert len(lines) == 4


def test_workers_match_inline(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["curvature", "--gen", "cycle:6", "--distance", "2", "--p", "0,1/3"]
    assert run_cli(argv) == EXIT_OK
    inline = capsys.readouterr().out
    assert run_cli([*argv, "--workers", "2"]) == EXIT_OK
    assert capsys.readouterr().out == inline


@pytest.mark.parametrize(
    "argv",
    [
        ["curvature", "--gen", "cycle:6", "--pair", "0,3", "--p", "0.5"],
        ["curvature", "--gen", "cycle:6", "--pair", "0,3", "--p", "3/2"],
        ["curvature", "--pair", "0,3"],
        ["curvature", "--gen", "cycle:6"],
        ["curvature", "--gen", "cycle:6", "--pair", "0,9"],
        ["curvature", "--gen", "wheel:6", "--pair", "0,1"],
        ["curvature", "-c", "does-not-exist.yml", "--gen", "cycle:6", "--pair", "0,3"],
    ],
)
def test_usage_errors(argv: list[str]) -> None:
    assert run_cli(argv) == EXIT_USAGE


def test_failed_verification_exit_code(monkeypatch: pytest.MonkeyPatch) -> None:
    from ricci_idleness.verify import SuiteResult

    def failing_suite(*_: object) -> SuiteResult:
        result = SuiteResult("family")
        result.expect_true("always fails", False, "forced")
        return result

    monkeypatch.setattr("ricci_idleness.main.run_suite", failing_suite)
    assert run_cli(["verify", "family"]) == EXIT_FAILED


def test_shortcuts_set_pair_mode() -> None:
    parser = build_parser()
    overrides = collect_overrides(parser.parse_args(["curvature", "--gen", "cycle:6", "--pair", "0,3"]))
    assert overrides["pairs"] == {"pair": "0,3", "mode": "explicit"}
    overrides = collect_overrides(parser.parse_args(["curvature", "--gen", "cycle:6", "--distance", "2"]))
    assert overrides["pairs"] == {"distance": 2, "mode": "distance"}
    overrides = collect_overrides(parser.parse_args(["verify", "hexagon", "--output.format", "csv"]))
    assert overrides == {"command": "verify", "verify": {"suite": "hexagon"}, "output": {"format": "csv"}}


def test_select_pairs_modes() -> None:
    source = generate_from_spec("cycle:6")
    assert len(select_pairs(source, PairSelectionConfig(mode=PairMode.ALL))) == 15
    assert len(select_pairs(source, PairSelectionConfig(mode=PairMode.EDGES))) == 6
    assert select_pairs(source, PairSelectionConfig(mode=PairMode.DISTANCE, distance=3)) == [(0, 3), (1, 4), (2, 5)]
    with pytest.raises(PairSelectionError):
        select_pairs(source, PairSelectionConfig())
