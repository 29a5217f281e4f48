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
from typing import Any, Dict, List, Sequence

from rich.console import Console
from rich.table import Table


def print_rows_table(title: str, rows: List[Dict[str, Any]], columns: Sequence[str]) -> None:
    """Print result rows to stderr using rich, leaving stdout for the artifact."""
    console = Console(stderr=True)
    if not rows:
        console.print(f"[yellow]No rows to display for {title}.[/yellow]")
        return

    table = Table(title=f"[bold magenta]{title}[/bold magenta]", show_header=True, header_style="bold cyan")
    for column in columns:
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(*(str(row.get(column, "-")) for column in columns))
    console.print(table)


def print_check_table(title: str, checks: List[Dict[str, Any]]) -> None:
    """Print verification checks with a colored PASS/FAIL column."""
    console = Console(stderr=True)
    if not checks:
        console.print("[yellow]No checks were run.[/yellow]")
        return

    table = Table(title=f"[bold magenta]{title}[/bold magenta]", show_header=True, header_style="bold cyan")
    table.add_column("Check", justify="left")
    table.add_column("Expected", justify="right")
    table.add_column("Computed", justify="right")
    table.add_column("Status", justify="center")

    failed = 0
    for check in checks:
        passed = check.get("passed", False)
        failed += 0 if passed else 1
        status = "[green]PASS[/]" if passed else "[red]FAIL[/]"
        table.add_row(str(check.get("name", "")), str(check.get("expected", "")), str(check.get("computed", "")), status)
    console.print(table)
    color = "red" if failed else "green"
    console.print(f"[{color}]{len(checks) - failed}/{len(checks)} checks passed[/]")
