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
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ricci_idleness.errors import DisconnectedSupports, NotOptimalInput
from ricci_idleness.graph import build_graph, gen_basic, gen_random_connected
from ricci_idleness.transport import (
    Measure,
    Potential,
    TransportPlan,
    W1Certificate,
    certificate_to_json,
    check_certificate,
    integerize_potential,
    is_one_lipschitz,
    lazy_measure,
    lipschitz_violations,
    potential_domain,
    w1,
)

HALF = Fraction(1, 2)


class TestW1:
    def test_diracs_on_a_path(self) -> None:
        g = gen_basic("path", 3)
        cert = w1(g, Measure.dirac(0), Measure.dirac(2))
        assert cert.value == 2
        assert dict(cert.plan.entries) == {(0, 2): Fraction(1)}
        assert cert.potential.values == {0: Fraction(2), 1: Fraction(1), 2: Fraction(0)}

    def test_split_mass(self) -> None:
        g = gen_basic("path", 3)
        cert = w1(g, Measure({0: HALF, 2: HALF}), Measure.dirac(1))
        assert cert.value == 1
        assert check_certificate(g, cert).ok

    def test_antipodal_cycle_pair(self) -> None:
        g = gen_basic("cycle", 6)
        cert = w1(g, lazy_measure(g, 0, Fraction(0)), lazy_measure(g, 3, Fraction(0)), anchor=3)
        assert cert.value == 1
        assert cert.potential[3] == 0
        assert check_certificate(g, cert).ok

    def test_equal_measures(self) -> None:
        g = gen_basic("cycle", 5)
        mu = lazy_measure(g, 2, HALF)
        cert = w1(g, mu, mu)
        assert cert.value == 0
        assert not cert.plan.entries
        assert check_certificate(g, cert).ok

    def test_disconnected_supports(self) -> None:
        g = build_graph(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedSupports):
            w1(g, Measure.dirac(0), Measure.dirac(3))

    def test_potential_domain(self) -> None:
        g = gen_basic("path", 6)
        assert potential_domain(g, Measure.dirac(0), Measure.dirac(4), anchor=5) == [0, 1, 3, 4, 5]

    def test_random_certificates(self) -> None:
        rng = np.random.default_rng(42)
        for _ in range(40):
            n = int(rng.integers(2, 9))
            g = gen_random_connected(n, 0.3, rng)
            x, y = (int(v) for v in rng.choice(n, size=2, replace=False))
            p = Fraction(int(rng.integers(0, 5)), 4)
            mu, nu = lazy_measure(g, x, p), lazy_measure(g, y, p)
            cert = w1(g, mu, nu)
            if mu == nu:
                assert cert.value == 0
                continue
            report = check_certificate(g, cert)
            assert report.ok, report.violations
            assert cert.potential.is_integer()
            assert cert.plan.row_sums() == dict(mu.support)
            assert cert.plan.column_sums() == dict(nu.support)
            assert cert.value == w1(g, nu, mu).value

    def test_triangle_inequality(self) -> None:
        rng = np.random.default_rng(42)
        for _ in range(60):
            n = int(rng.integers(3, 10))
            g = gen_random_connected(n, 0.3, rng)
            p = Fraction(int(rng.integers(0, 5)), 7)
            a, b, c = (lazy_measure(g, int(v), p) for v in rng.choice(n, size=3, replace=False))
            assert w1(g, a, c).value <= w1(g, a, b).value + w1(g, b, c).value


class TestCheckCertificate:
    def test_wrong_value_is_reported(self) -> None:
        g = gen_basic("path", 3)
        cert = w1(g, Measure.dirac(0), Measure.dirac(2))
        report = check_certificate(g, replace(cert, value=Fraction(3)))
        assert not report.ok
        assert any("plan cost" in v for v in report.violations)
        assert any("dual objective" in v for v in report.violations)

    def test_non_lipschitz_potential_is_reported(self) -> None:
        g = gen_basic("path", 3)
        cert = w1(g, Measure.dirac(0), Measure.dirac(2))
        bad = Potential({0: Fraction(3), 1: Fraction(1), 2: Fraction(0)})
        report = check_certificate(g, replace(cert, potential=bad))
        assert any("1-Lipschitz" in v for v in report.violations)

    def test_missing_support_vertex(self) -> None:
        g = gen_basic("path", 3)
        cert = w1(g, Measure.dirac(0), Measure.dirac(2))
        report = check_certificate(g, replace(cert, potential=Potential({0: Fraction(2)})))
        assert report.violations == ["potential is undefined on support vertices [2]"]


def _fractional_certificate() -> W1Certificate:
    mu, nu = Measure.dirac(0), Measure.dirac(1)
    plan = TransportPlan({(0, 1): Fraction(1)}, mu, nu)
    phi = Potential({0: Fraction(3, 2), 1: HALF, 2: HALF})
    return W1Certificate(Fraction(1), plan, phi)


class TestIntegerize:
    def test_floors_fractional_potential(self) -> None:
        g = gen_basic("path", 3)
        phi = integerize_potential(g, _fractional_certificate())
        assert phi.values == {0: Fraction(1), 1: Fraction(0), 2: Fraction(0)}
        assert is_one_lipschitz(g, phi)

    def test_rejects_broken_slackness(self) -> None:
        g = gen_basic("path", 3)
        cert = replace(_fractional_certificate(), potential=Potential({v: Fraction(0) for v in range(3)}))
        with pytest.raises(NotOptimalInput):
            integerize_potential(g, cert)

    def test_fractional_parts_may_differ_between_components(self) -> None:
        g = gen_basic("path", 3)
        cert = replace(_fractional_certificate(), potential=Potential({0: Fraction(4, 3), 1: Fraction(1, 3), 2: HALF}))
        phi = integerize_potential(g, cert)
        assert phi.values == {0: Fraction(1), 1: Fraction(0), 2: Fraction(0)}


@given(st.lists(st.fractions(min_value=-1, max_value=1, max_denominator=12), min_size=1, max_size=10))
def test_floor_and_ceil_keep_lipschitz(steps: list[Fraction]) -> None:
    values = [Fraction(0)]
    for step in steps:
        values.append(values[-1] + step)
    g = gen_basic("path", len(values))
    phi = Potential(dict(enumerate(values)))
    assert is_one_lipschitz(g, phi)
    assert not lipschitz_violations(g, phi.floor())
    assert not lipschitz_violations(g, phi.ceil())
    assert phi.floor().is_integer()
    assert phi.shifted(Fraction(1, 3)).shifted(Fraction(-1, 3)) == phi


def test_certificate_to_json() -> None:
    g = gen_basic("path", 3)
    data = certificate_to_json(w1(g, Measure.dirac(0), Measure.dirac(2)))
    assert data == {
        "value": "2/1",
        "plan": [[0, 2, "1/1"]],
        "potential": [[0, "2/1"], [1, "1/1"], [2, "0/1"]],
    }
