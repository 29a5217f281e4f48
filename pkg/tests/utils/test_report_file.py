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

from ricci_idleness.utils import ReportFile
from ricci_idleness.utils.report_file import render_csv, save_report, with_decimal_hints


def test_report_file_json() -> None:
    report = ReportFile("curvature", [{"kappa": "1/3"}])
    assert report.get_filename() == "curvature.json"
    assert report.render() == json.dumps([{"kappa": "1/3"}], indent=2) + "\n"


def test_render_csv_unions_columns() -> None:
    text = render_csv([{"x": 0, "kappa": "1/3"}, {"x": 1, "kappa": "2/3", "extra": "e"}])
    assert text == "x,kappa,extra\n0,1/3,\n1,2/3,e\n"
    assert ReportFile("t", [{"a": 1}], file_type="csv").render() == "a\n1\n"


def test_with_decimal_hints() -> None:
    row = with_decimal_hints({"x": "a", "kappa": "1/3", "p": "0/1"}, ["kappa", "p"])
    assert list(row) == ["x", "kappa", "kappa_decimal", "p", "p_decimal"]
    assert row["kappa_decimal"] == "0.333333333333"
    assert row["p_decimal"] == "0"


def test_save_report_to_stdout(capsys: pytest.CaptureFixture[str]) -> None:
    save_report(ReportFile("r", {"a": "1/2"}))
    assert json.loads(capsys.readouterr().out) == {"a": "1/2"}


def test_save_report_to_file(tmp_path: Path) -> None:
    path = tmp_path / "nested" / "out.csv"
    save_report(ReportFile("r", [{"a": "1/2"}], file_type="csv"), str(path))
    assert path.read_text() == "a\n1/2\n"
