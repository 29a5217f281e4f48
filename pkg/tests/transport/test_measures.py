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

from ricci_idleness.errors import BadIdleness, InvalidMeasure, IsolatedVertex
from ricci_idleness.graph import build_graph, gen_basic
from ricci_idleness.transport import Measure, lazy_measure


class TestLazyMeasure:
    def test_half(self) -> None:
        mu = lazy_measure(gen_basic("cycle", 6), 0, Fraction(1, 2))
        assert mu.support == {0: Fraction(1, 2), 1: Fraction(1, 4), 5: Fraction(1, 4)}
        assert mu.common_denominator() == 4

    def test_zero_idleness_omits_centre(self) -> None:
        mu = lazy_measure(gen_basic("star", 4), 0, Fraction(0))
        assert mu.vertices() == [1, 2, 3]
        assert mu[0] == 0
        assert mu[2] == Fraction(1, 3)

    def test_full_idleness_is_dirac(self) -> None:
        assert lazy_measure(gen_basic("path", 3), 1, Fraction(1)) == Measure.dirac(1)

    @pytest.mark.parametrize("p", [Fraction(-1, 2), Fraction(3, 2)])
    def test_bad_idleness(self, p: Fraction) -> None:
        with pytest.raises(BadIdleness):
            lazy_measure(gen_basic("path", 3), 0, p)

    def test_isolated_vertex(self) -> None:
        g = build_graph(2, [])
        with pytest.raises(IsolatedVertex):
            lazy_measure(g, 0, Fraction(1, 2))
        assert lazy_measure(g, 0, Fraction(1)) == Measure.dirac(0)


class TestMeasure:
    def test_support_is_sorted(self) -> None:
        mu = Measure({3: Fraction(1, 2), 1: Fraction(1, 2)})
        assert mu.vertices() == [1, 3]

    def test_masses_must_sum_to_one(self) -> None:
        with pytest.raises(InvalidMeasure):
            Measure({0: Fraction(1, 2), 1: Fraction(1, 3)})

    def test_masses_must_be_positive(self) -> None:
        with pytest.raises(InvalidMeasure):
            Measure({0: Fraction(3, 2), 1: Fraction(-1, 2)})
