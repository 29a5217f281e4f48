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
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from ricci_idleness.utils.rational import format_rational


def render_value(value: Any) -> str:
    """Exact text for a check value: rationals as num/den, collections as sorted sets."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    if isinstance(value, (set, frozenset)):
        return "{" + ", ".join(render_value(v) for v in sorted(value)) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render_value(v) for v in value) + "]"
    return str(value)


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    computed: str
    passed: bool

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "expected": self.expected, "computed": self.computed, "passed": self.passed}


@dataclass
class SuiteResult:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def expect_equal(self, name: str, expected: Any, computed: Any) -> bool:
        passed = bool(expected == computed)
        self.checks.append(CheckResult(name, render_value(expected), render_value(computed), passed))
        return passed

    def expect_true(self, name: str, condition: bool, detail: str = "") -> bool:
        self.checks.append(CheckResult(name, "true", detail or render_value(condition), bool(condition)))
        return bool(condition)

    def tally(self, name: str, passed: int, total: int) -> bool:
        """Records a property checked on `total` instances, `passed` of which held."""
        return self.expect_equal(name, f"{total}/{total}", f"{passed}/{total}")

    def extend(self, prefix: str, checks: Iterable[CheckResult]) -> None:
        for c in checks:
            self.checks.append(CheckResult(f"{prefix} {c.name}", c.expected, c.computed, c.passed))

    def to_json(self) -> dict[str, Any]:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}
