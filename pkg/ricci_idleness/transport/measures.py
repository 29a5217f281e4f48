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
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ricci_idleness.errors import BadIdleness, InvalidMeasure, IsolatedVertex
from ricci_idleness.graph.core import Graph


@dataclass(frozen=True)
class Measure:
    """Finitely supported probability measure on vertex indices."""

    support: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ordered = {v: Fraction(m) for v, m in sorted(self.support.items())}
        for v, mass in ordered.items():
            if mass <= 0:
                raise InvalidMeasure(f"mass at vertex {v} must be positive, got {mass}")
        total = sum(ordered.values(), Fraction(0))
        if total != 1:
            raise InvalidMeasure(f"masses must sum to 1, got {total}")
        object.__setattr__(self, "support", ordered)

    def __getitem__(self, v: int) -> Fraction:
        return self.support.get(v, Fraction(0))

    def vertices(self) -> list[int]:
        return list(self.support)

    def common_denominator(self) -> int:
        return math.lcm(*(m.denominator for m in self.support.values()))

    @classmethod
    def dirac(cls, v: int) -> "Measure":
        return cls({v: Fraction(1)})


def lazy_measure(g: Graph, x: int, p: Fraction) -> Measure:
    """Mass p at x and (1 - p)/deg(x) at each neighbour. The x entry is omitted when p = 0."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise BadIdleness(f"idleness must lie in [0, 1], got {p}")
    if p == 1:
        return Measure.dirac(x)
    degree = g.degree(x)
    if degree == 0:
        raise IsolatedVertex(f"vertex {x} has no neighbours and idleness {p} < 1")
    share = (1 - p) / degree
    support = {w: share for w in g.neighbors(x)}
    if p > 0:
        support[x] = p
    return Measure(support)
