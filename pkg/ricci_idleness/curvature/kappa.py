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
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ricci_idleness.errors import BadIdleness, BothDistancesZero, DistanceTooSmall, InvariantViolation, NonPositiveKappa
from ricci_idleness.graph.core import Graph, MarkedPair, eccentricity
from ricci_idleness.transport.measures import lazy_measure
from ricci_idleness.transport.wasserstein import W1Certificate, integerize_potential, w1

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def kappa_certificate(g: Graph, x: int, y: int, p: Fraction) -> W1Certificate:
    """W1 certificate between the lazy measures at x and y, with the potential anchored at y."""
    MarkedPair(g, x, y)
    p = Fraction(p)
    return w1(g, lazy_measure(g, x, p), lazy_measure(g, y, p), anchor=y)


def kappa_p(g: Graph, x: int, y: int, p: Fraction) -> Fraction:
    """Ollivier-Ricci curvature with idleness p: 1 - W1(mu_x^p, mu_y^p) / d(x, y)."""
    cert = kappa_certificate(g, x, y, p)
    return 1 - cert.value / g.distance(x, y)


def kappa_lly(g: Graph, x: int, y: int) -> Fraction:
    """Lin-Lu-Yau curvature. kappa_p / (1 - p) is constant on [1/2, 1), so it is read off at p = 1/2."""
    return 2 * kappa_p(g, x, y, HALF)


def optimal_potential_gap(g: Graph, x: int, y: int, p: Fraction) -> int:
    """phi(x) - phi(y) for the integer optimal potential between mu_x^p and mu_y^p.

    Always lies in [delta - 2, delta] and equals delta once p > 1/2.
    """
    p = Fraction(p)
    if not 0 < p <= 1:
        raise BadIdleness(f"potential gap needs idleness in (0, 1], got {p}")
    delta = g.distance(x, y)
    if delta < 2:
        raise DistanceTooSmall(f"potential gap needs d(x, y) >= 2, got {delta}")
    phi = integerize_potential(g, kappa_certificate(g, x, y, p))
    gap = phi[x] - phi[y]
    if not delta - 2 <= gap <= delta:
        raise InvariantViolation(f"potential gap {gap} outside [{delta - 2}, {delta}] at p={p}")
    if p > HALF and gap != delta:
        raise InvariantViolation(f"potential gap {gap} should equal {delta} at p={p}")
    return int(gap)


def product_formula_rhs(kG: Fraction, kH: Fraction, DG: int, DH: int, dx: int, dy: int) -> Fraction:
    """Curvature of ((x1, y1), (x2, y2)) in G x H from the factor curvatures.

    dx and dy are the factor distances. A factor with zero distance contributes nothing, whatever
    curvature value is passed for it.
    """
    if dx + dy == 0:
        raise BothDistancesZero("at least one factor distance must be positive")
    numerator = Fraction(0)
    if dx:
        numerator += DG * dx * Fraction(kG)
    if dy:
        numerator += DH * dy * Fraction(kH)
    return numerator / ((DG + DH) * (dx + dy))


def bonnet_myers_diameter_bound(kappa: Fraction, p: Fraction) -> Fraction:
    """Radius bound 2(1 - p) / kappa around a vertex whose curvature to every other vertex is at least kappa.

    The diameter is at most twice this value.
    """
    kappa, p = Fraction(kappa), Fraction(p)
    if kappa <= 0:
        raise NonPositiveKappa(f"curvature lower bound must be positive, got {kappa}")
    if not 0 <= p < 1:
        raise BadIdleness(f"idleness must lie in [0, 1), got {p}")
    return 2 * (1 - p) / kappa


@dataclass(frozen=True)
class BonnetMyersReport:
    vertex: int
    p: Fraction
    min_kappa: Fraction
    eccentricity: int
    radius_bound: Optional[Fraction]

    @property
    def diameter_bound(self) -> Optional[Fraction]:
        return None if self.radius_bound is None else 2 * self.radius_bound

    @property
    def holds(self) -> bool:
        return self.radius_bound is None or self.eccentricity <= self.radius_bound


def bonnet_myers_check(g: Graph, x: int, p: Fraction) -> BonnetMyersReport:
    """Compares the eccentricity of x with the radius bound from min_y kappa_p(x, y).

    Only vertices in the component of x are considered. When that minimum is not positive the bound is vacuous.
    Raises IsolatedVertex when x is alone in its component.
    """
    p = Fraction(p)
    ecc = eccentricity(g, x)
    others = [y for y in range(g.vertex_count) if y != x and g.distances.reachable(x, y)]
    min_kappa = min(kappa_p(g, x, y, p) for y in others)
    radius = bonnet_myers_diameter_bound(min_kappa, p) if min_kappa > 0 else None
    return BonnetMyersReport(vertex=x, p=p, min_kappa=min_kappa, eccentricity=ecc, radius_bound=radius)


def positive_pair_witness(g: Graph, p: Fraction) -> Optional[tuple[int, int, Fraction]]:
    """A pair with positive kappa_p, searching the farthest pairs first.

    A finite connected graph always has one for p in (0, 1); None means none was found.
    """
    p = Fraction(p)
    pairs = [
        (g.distance(x, y), x, y)
        for x in range(g.vertex_count)
        for y in range(x + 1, g.vertex_count)
        if g.distances.reachable(x, y)
    ]
    for _, x, y in sorted(pairs, key=lambda t: (-t[0], t[1], t[2])):
        kappa = kappa_p(g, x, y, p)
        if kappa > 0:
            return x, y, kappa
    logger.warning("no pair with positive curvature at p=%s among %d pairs", p, len(pairs))
    return None
