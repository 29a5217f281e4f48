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
"""Long-scale idleness profiles.

For a pair x, y at distance delta >= 2, W1(mu_x^p, mu_y^p) is the maximum of the three lines
f_j(p) = p*j + (1 - p)*c_j, j in {delta-2, delta-1, delta}, where c_j is the largest value of

    F(phi) = (1/d_x) sum_{w ~ x} phi(w) - (1/d_y) sum_{w ~ y} phi(w)

over integer 1-Lipschitz phi with phi(x) = j and phi(y) = 0. An IdlenessProfile stores these
three intercepts and the points where consecutive lines cross.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ricci_idleness.errors import DistanceTooSmall, InfeasiblePin, InvariantViolation
from ricci_idleness.graph.core import Graph, MarkedPair
from ricci_idleness.transport.flow import MinCostFlowNetwork
from ricci_idleness.transport.wasserstein import Potential
from ricci_idleness.utils.rational import format_rational

logger = logging.getLogger(__name__)


def crossing_point(gap: Fraction) -> Fraction:
    """Idleness at which two consecutive lines whose intercepts differ by `gap` cross: gap / (gap + 1)."""
    return gap / (gap + 1)


def neighbourhood_gap(g: Graph, x: int, y: int, phi: Potential) -> Fraction:
    """F(phi): mean of phi over the neighbours of x minus its mean over the neighbours of y."""
    left = sum((phi[w] for w in g.neighbors(x)), Fraction(0)) / g.degree(x)
    right = sum((phi[w] for w in g.neighbors(y)), Fraction(0)) / g.degree(y)
    return left - right


@dataclass(frozen=True)
class PinnedSupremum:
    value: Fraction
    potential: Potential


def maximizing_potential(g: Graph, x: int, y: int, j: int) -> PinnedSupremum:
    """c_j together with an integer potential attaining it.

    The maximisation is the dual of a transshipment: graph edges become unit-cost arcs in both
    directions, the pin phi(x) - phi(y) = j becomes the arc y -> x of cost j and the arc x -> y of
    cost -j, the neighbours of y ship l/d_y units and the neighbours of x absorb l/d_x units, with
    l = lcm(d_x, d_y). Node potentials of the optimal flow are an optimal phi.
    """
    delta = MarkedPair(g, x, y).delta
    if delta < 2:
        raise DistanceTooSmall(f"c_j needs d(x, y) >= 2, got {delta}")
    if abs(j) > delta:
        raise InfeasiblePin(f"no 1-Lipschitz potential has phi(x) - phi(y) = {j} when d(x, y) = {delta}")

    scale = math.lcm(g.degree(x), g.degree(y))
    network = MinCostFlowNetwork(g.vertex_count)
    for u, v in g.edges():
        network.add_arc(u, v, 1)
        network.add_arc(v, u, 1)
    network.add_arc(y, x, j)
    network.add_arc(x, y, -j)
    for w in g.neighbors(y):
        network.set_supply(w, scale // g.degree(y))
    for w in g.neighbors(x):
        network.set_supply(w, -(scale // g.degree(x)))
    solution = network.solve()

    base = solution.potentials[y]
    phi = Potential({v: Fraction(h - base) for v, h in enumerate(solution.potentials)})
    value = Fraction(solution.cost, scale)
    attained = neighbourhood_gap(g, x, y, phi)
    if attained != value or phi[x] != j:
        raise InvariantViolation(f"potential attains F = {attained} with phi(x) = {phi[x]}, expected c_{j} = {value}")
    return PinnedSupremum(value, phi)


def potential_sup_cj(g: Graph, x: int, y: int, j: int) -> Fraction:
    """c_j = sup F(phi) over integer 1-Lipschitz phi with phi(x) = j and phi(y) = 0."""
    return maximizing_potential(g, x, y, j).value


@dataclass(frozen=True)
class IdlenessProfile:
    delta: int
    c_lo: Fraction
    c_mid: Fraction
    c_hi: Fraction
    p1: Fraction
    p2: Fraction
    d_x: int
    d_y: int

    @property
    def lcm(self) -> int:
        return math.lcm(self.d_x, self.d_y)

    @property
    def intercepts(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.c_lo, self.c_mid, self.c_hi

    def lines(self) -> list[tuple[int, Fraction]]:
        """(j, c_j) for the three lines f_j."""
        return list(zip(range(self.delta - 2, self.delta + 1), self.intercepts))

    @property
    def chain_bound(self) -> Fraction:
        """Upper bound on c_mid - c_hi. Clamped at 0 for pairs with a degree-1 endpoint."""
        return max(Fraction(0), 1 - Fraction(1, self.d_x) - Fraction(1, self.d_y))

    @property
    def critical_upper_bound(self) -> Fraction:
        return crossing_point(self.chain_bound)

    @property
    def critical_lower_bound(self) -> Fraction:
        return Fraction(1, 1 + self.lcm)

    def validate(self) -> None:
        first, second = self.c_lo - self.c_mid, self.c_mid - self.c_hi
        if not -1 < first <= second <= self.chain_bound:
            raise InvariantViolation(f"intercept chain fails: -1 < {first} <= {second} <= {self.chain_bound}")
        if self.p1 != crossing_point(first) or self.p2 != crossing_point(second):
            raise InvariantViolation(f"crossing points ({self.p1}, {self.p2}) do not match the intercepts")
        if self.p1 > self.p2:
            raise InvariantViolation(f"p1 = {self.p1} exceeds p2 = {self.p2}")
        if self.p2 > self.critical_upper_bound:
            raise InvariantViolation(f"p2 = {self.p2} exceeds {self.critical_upper_bound}")
        for p in (self.p1, self.p2):
            if p < 1 and (p * self.lcm / (1 - p)).denominator != 1:
                raise InvariantViolation(f"{p} is not of the form a/(a + {self.lcm})")


def idleness_profile(g: Graph, x: int, y: int) -> IdlenessProfile:
    """Exact description of p -> kappa_p(x, y) for a pair at distance at least 2."""
    delta = MarkedPair(g, x, y).delta
    if delta < 2:
        raise DistanceTooSmall(f"idleness profiles need d(x, y) >= 2, got {delta}; sample the curve instead")
    c_lo, c_mid, c_hi = (potential_sup_cj(g, x, y, j) for j in (delta - 2, delta - 1, delta))
    profile = IdlenessProfile(
        delta=delta,
        c_lo=c_lo,
        c_mid=c_mid,
        c_hi=c_hi,
        p1=crossing_point(c_lo - c_mid),
        p2=crossing_point(c_mid - c_hi),
        d_x=g.degree(x),
        d_y=g.degree(y),
    )
    profile.validate()
    logger.debug("profile of (%d, %d): c = %s, p1 = %s, p2 = %s", x, y, profile.intercepts, profile.p1, profile.p2)
    return profile


def critical_points(profile: IdlenessProfile) -> list[Fraction]:
    """Idleness values in (0, 1) where the slope of the profile changes."""
    return sorted({p for p in (profile.p1, profile.p2) if 0 < p < 1})


def evaluate_profile(profile: IdlenessProfile, p: Fraction) -> Fraction:
    p = Fraction(p)
    transport = max(p * j + (1 - p) * c for j, c in profile.lines())
    return 1 - transport / profile.delta


def lly_from_profile(profile: IdlenessProfile) -> Fraction:
    """kappa_LLY from the last line, which is the only one active on [1/2, 1]."""
    return 1 - profile.c_hi / profile.delta


@dataclass(frozen=True)
class BoundCheck:
    name: str
    passed: bool
    lhs: Fraction
    rhs: Fraction
    tight: bool = False


@dataclass
class BoundReport:
    checks: list[BoundCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def get(self, name: str) -> BoundCheck:
        return next(c for c in self.checks if c.name == name)

    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.passed]

    def le(self, name: str, lhs: Fraction, rhs: Fraction) -> None:
        self.checks.append(BoundCheck(name, lhs <= rhs, lhs, rhs, lhs == rhs))

    def lt(self, name: str, lhs: Fraction, rhs: Fraction) -> None:
        self.checks.append(BoundCheck(name, lhs < rhs, lhs, rhs))


def check_critical_bounds(profile: IdlenessProfile) -> BoundReport:
    """Evaluates every bound on the intercepts and critical points of a profile.

    Each check records both compared quantities; `tight` marks inequalities attained with equality.
    """
    report = BoundReport()
    first, second = profile.c_lo - profile.c_mid, profile.c_mid - profile.c_hi
    report.lt("chain_lower", Fraction(-1), first)
    report.le("chain_order", first, second)
    report.le("chain_upper", second, profile.chain_bound)
    report.lt("slope_order_low", Fraction(profile.delta - 2) - profile.c_lo, Fraction(profile.delta - 1) - profile.c_mid)
    report.lt("slope_order_high", Fraction(profile.delta - 1) - profile.c_mid, Fraction(profile.delta) - profile.c_hi)

    points = critical_points(profile)
    for p in points:
        label = format_rational(p)
        report.le(f"critical_lower[{label}]", profile.critical_lower_bound, p)
        report.le(f"critical_upper[{label}]", p, profile.critical_upper_bound)
        a = p * profile.lcm / (1 - p)
        report.checks.append(BoundCheck(f"critical_form[{label}]", a.denominator == 1 and a >= 1, a, Fraction(profile.lcm)))
    last_start = max(points, default=Fraction(0))
    first_end = min(points, default=Fraction(1))
    report.le("last_piece", last_start, Fraction(1, 2))
    report.le("first_piece", profile.critical_lower_bound, first_end)
    return report
