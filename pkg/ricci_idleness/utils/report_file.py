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
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Optional

from ricci_idleness.utils.rational import decimal_hint, parse_rational

logger = logging.getLogger(__name__)


class ReportFile:
    """Named output artifact. JSON contents are any JSON value; CSV contents are a list of flat row dicts."""

    name: str
    contents: Any

    def __init__(self, name: str, contents: Any, file_type: str = "json"):
        self.name = name
        self.contents = contents
        self.file_type = file_type

    def get_filename(self) -> str:
        return f"{self.name}.{self.file_type}"

    def get_contents(self) -> Any:
        return self.contents

    def render(self) -> str:
        if self.file_type == "csv":
            return render_csv(self.get_contents())
        return json.dumps(self.get_contents(), indent=2) + "\n"


def render_csv(rows: list[dict[str, Any]]) -> str:
    buffer = io.StringIO()
    columns: list[str] = []
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def with_decimal_hints(row: dict[str, Any], keys: list[str]) -> dict[str, Any]:
    """Adds a `<key>_decimal` column after each listed rational column."""
    out: dict[str, Any] = {}
    for k, v in row.items():
        out[k] = v
        if k in keys and v not in (None, ""):
            out[f"{k}_decimal"] = decimal_hint(parse_rational(str(v)))
    return out


def save_report(report: ReportFile, path: Optional[str] = None) -> None:
    """Writes the report to path, or to stdout when no path is given."""
    text = report.render()
    if not path:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info("Report saved to: %s", path)
