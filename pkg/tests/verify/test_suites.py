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
from fractions import Fraction

import pytest

from ricci_idleness.config import SuiteName, VerifyConfig
from ricci_idleness.curvature import kappa_p
from ricci_idleness.graph import gen_hex_torus, sphere_sizes
from ricci_idleness.verify import SuiteResult, family_critical_points, family_intercepts, run_suite, render_value
from ricci_idleness.verify.suites import FAMILY_CASES


class TestFamilyFormulas:
    def test_intercepts(self) -> None:
        assert family_intercepts(1, 1, 1) == (Fraction(8, 5), Fraction(7, 5), Fraction(1))

    @pytest.mark.parametrize(
        "m,n,k,p1,p2",
        [
            (1, 1, 1, Fraction(1, 6), Fraction(2, 7)),
            (1, 1, 0, Fraction(1, 5), Fraction(1, 3)),
            (0, 2, 1, Fraction(0), Fraction(2, 7)),
        ],
    )
    def test_critical_points(self, m: int, n: int, k: int, p1: Fraction, p2: Fraction) -> None:
        assert family_critical_points(m, n, k) == (p1, p2)


class TestSuites:
    def test_family_single_case(self) -> None:
        result = run_suite(VerifyConfig(suite=SuiteName.FAMILY, m=1, n=1, k=1))
        assert result.passed, [c for c in result.failures()]
        by_name = {c.name: c for c in result.checks}
        assert by_name["G(1,1,1) p1"].computed == "1/6"
        assert by_name["G(1,1,1) p2"].computed == "2/7"
        assert by_name["G(1,1,1) lly from last line"].passed

    def test_family_sweep(self) -> None:
        result = run_suite(VerifyConfig(suite=SuiteName.FAMILY))
        assert result.passed, [c for c in result.failures()]
        names = {c.name for c in result.checks}
        for m, n, k in FAMILY_CASES:
            assert f"G({m},{n},{k}) c" in names
        assert sum(name.startswith("sharpness") for name in names) == 2 * (3 + 4 + 5)

    def test_figure3(self) -> None:
        result = run_suite(VerifyConfig(suite=SuiteName.FIGURE3))
        assert result.passed, [c for c in result.failures()]
        assert len(result.checks) == 10

    def test_tree(self) -> None:
        result = run_suite(VerifyConfig(suite=SuiteName.TREE))
        assert result.passed, [c for c in result.failures()]
        assert len(result.checks) == 2 * 3 * 3

    def test_product(self) -> None:
        result = run_suite(VerifyConfig(suite=SuiteName.PRODUCT), seed=3)
        assert result.passed, [c for c in result.failures()]
        tallies = [c for c in result.checks if "product formula" in c.name]
        assert len(tallies) == 3 * 4
        assert all(c.computed == "13/13" for c in tallies)
        assert sum("p=2/3" in c.name for c in tallies) == 3

    def test_bounds_small(self) -> None:
        config = VerifyConfig(suite=SuiteName.BOUNDS, graph_count=12, oracle_count=6, max_vertices=7)
        result = run_suite(config, seed=5)
        assert result.passed, [c for c in result.failures()]
        names = {c.name for c in result.checks}
        assert {"w1 equals enumeration oracle", "positive curvature somewhere", "radius bound"} <= names
        assert next(c for c in result.checks if c.name == "w1 equals enumeration oracle").computed == "6/6"

    def test_bounds_is_seeded(self) -> None:
        config = VerifyConfig(suite=SuiteName.BOUNDS, graph_count=4, oracle_count=2, max_vertices=6)
        assert run_suite(config, seed=11).to_json() == run_suite(config, seed=11).to_json()


class TestHexagonPieces:
    def test_sphere_sizes_match_the_plane(self) -> None:
        g = gen_hex_torus(20, 20)
        assert sphere_sizes(g, 0, 9) == [1] + [3 * r for r in range(1, 10)]

    def test_edge_and_distance_seven_curvature(self) -> None:
        g = gen_hex_torus(20, 20)
        p = Fraction(1, 4)
        assert kappa_p(g, 0, 1, p) == Fraction(-2, 3) * (1 - p)
        sphere = [v for v in range(g.vertex_count) if g.distance(0, v) == 7]
        assert len(sphere) == 21
        values = {kappa_p(g, 0, v, p) for v in sphere}
        assert values == {Fraction(2, 21) * (1 - p), Fraction(-2, 21) * (1 - p)}


class TestSuiteResult:
    def test_checks(self) -> None:
        result = SuiteResult("demo")
        assert result.expect_equal("same", Fraction(1, 2), Fraction(2, 4))
        assert not result.expect_equal("different", {Fraction(1)}, {Fraction(1), Fraction(-1)})
        assert result.tally("count", 3, 3)
        assert not result.passed
        assert [c.name for c in result.failures()] == ["different"]
        assert result.to_json()["checks"][1] == {
            "name": "different",
            "expected": "{1/1}",
            "computed": "{-1/1, 1/1}",
            "passed": False,
        }

    def test_render_value(self) -> None:
        assert render_value(True) == "true"
        assert render_value([1, Fraction(1, 2)]) == "[1/1, 1/2]"
        assert render_value("3/3") == "3/3"
