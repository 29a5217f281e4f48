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
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional

import networkx as nx
import numpy as np

from ricci_idleness.errors import DisconnectedSupports, InvariantViolation, NotOptimalInput
from ricci_idleness.graph.core import Graph
from ricci_idleness.transport.flow import MinCostFlowNetwork
from ricci_idleness.transport.measures import Measure
from ricci_idleness.utils.rational import format_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransportPlan:
    """Coupling of source and target, stored as its positive entries."""

    entries: Mapping[tuple[int, int], Fraction]
    source: Measure
    target: Measure

    def cost(self, g: Graph) -> Fraction:
        return sum((mass * g.distance(u, v) for (u, v), mass in self.entries.items()), Fraction(0))

    def row_sums(self) -> dict[int, Fraction]:
        sums: dict[int, Fraction] = defaultdict(Fraction)
        for (u, _), mass in self.entries.items():
            sums[u] += mass
        return dict(sums)

    def column_sums(self) -> dict[int, Fraction]:
        sums: dict[int, Fraction] = defaultdict(Fraction)
        for (_, v), mass in self.entries.items():
            sums[v] += mass
        return dict(sums)


@dataclass(frozen=True)
class Potential:
    """Rational function on a finite set of vertices."""

    values: Mapping[int, Fraction] = field(default_factory=dict)

    def __getitem__(self, v: int) -> Fraction:
        return self.values[v]

    def __contains__(self, v: object) -> bool:
        return v in self.values

    def domain(self) -> list[int]:
        return sorted(self.values)

    def floor(self) -> "Potential":
        return Potential({v: Fraction(math.floor(x)) for v, x in self.values.items()})

    def ceil(self) -> "Potential":
        return Potential({v: Fraction(math.ceil(x)) for v, x in self.values.items()})

    def shifted(self, amount: Fraction, vertices: Optional[Iterable[int]] = None) -> "Potential":
        moved = set(self.values) if vertices is None else set(vertices)
        return Potential({v: x + amount if v in moved else x for v, x in self.values.items()})

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for x in self.values.values())

    def objective(self, mu: Measure, nu: Measure) -> Fraction:
        """Dual objective sum_v phi(v) (mu(v) - nu(v))."""
        total = Fraction(0)
        for v in set(mu.support) | set(nu.support):
            total += self.values[v] * (mu[v] - nu[v])
        return total


@dataclass(frozen=True)
class W1Certificate:
    value: Fraction
    plan: TransportPlan
    potential: Potential


@dataclass
class CertificateReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str) -> None:
        self.violations.append(message)


def lipschitz_violations(g: Graph, phi: Potential, metric: bool = False) -> list[tuple[int, int]]:
    """Pairs on which phi fails to be 1-Lipschitz.

    By default only graph edges with both ends in the domain are checked; with metric=True every
    pair of domain vertices is compared against its graph distance.
    """
    bad: list[tuple[int, int]] = []
    domain = phi.domain()
    if metric:
        for i, u in enumerate(domain):
            for v in domain[i + 1 :]:
                if abs(phi[u] - phi[v]) > g.distance(u, v):
                    bad.append((u, v))
        return bad
    for u in domain:
        for v in g.neighbors(u):
            if u < v and v in phi and abs(phi[u] - phi[v]) > 1:
                bad.append((u, v))
    return bad


def is_one_lipschitz(g: Graph, phi: Potential) -> bool:
    return not lipschitz_violations(g, phi)


def potential_domain(g: Graph, mu: Measure, nu: Measure, anchor: Optional[int] = None) -> list[int]:
    """Union of the closed 1-balls around both supports, plus the anchor."""
    domain: set[int] = set()
    for v in (*mu.support, *nu.support):
        domain.add(v)
        domain.update(g.neighbors(v))
    if anchor is not None:
        domain.add(anchor)
    return sorted(domain)


def w1(g: Graph, mu: Measure, nu: Measure, anchor: Optional[int] = None) -> W1Certificate:
    """Exact 1-Wasserstein distance with an optimal plan and an optimal 1-Lipschitz potential.

    The potential is normalised so that it vanishes at `anchor` (default: the smallest vertex of
    the target support).
    """
    sources = mu.vertices()
    sinks = nu.vertices()
    if anchor is None:
        anchor = sinks[0]
    for u in sources:
        for v in sinks:
            if not g.distances.reachable(u, v):
                raise DisconnectedSupports(f"vertices {u} and {v} of the two supports are not connected")
    domain = potential_domain(g, mu, nu, anchor)

    if mu == nu:
        return W1Certificate(Fraction(0), TransportPlan({}, mu, nu), Potential({v: Fraction(0) for v in domain}))

    scale = math.lcm(mu.common_denominator(), nu.common_denominator())
    network = MinCostFlowNetwork(len(sources) + len(sinks))
    arc_ends: list[tuple[int, int]] = []
    for i, u in enumerate(sources):
        network.set_supply(i, int(mu[u] * scale))
        for j, v in enumerate(sinks):
            network.add_arc(i, len(sources) + j, g.distance(u, v))
            arc_ends.append((u, v))
    for j, v in enumerate(sinks):
        network.set_supply(len(sources) + j, -int(nu[v] * scale))
    solution = network.solve()

    entries = {ends: Fraction(f, scale) for ends, f in zip(arc_ends, solution.flows) if f > 0}
    value = Fraction(solution.cost, scale)

    # Sink duals, extended to the whole domain by the McShane formula min_t (psi(t) + d(v, t)).
    psi = -np.asarray(solution.potentials[len(sources) :], dtype=np.int64)
    block = g.distances.dist[np.ix_(domain, sinks)]
    extended = (block + psi[np.newaxis, :]).min(axis=1)
    offset = int(extended[domain.index(anchor)])
    potential = Potential({v: Fraction(int(x) - offset) for v, x in zip(domain, extended)})

    dual = potential.objective(mu, nu)
    if dual != value:
        raise InvariantViolation(f"dual objective {dual} differs from transport cost {value}")
    logger.debug("W1 over %d x %d supports = %s", len(sources), len(sinks), value)
    return W1Certificate(value, TransportPlan(entries, mu, nu), potential)


def integerize_potential(g: Graph, cert: W1Certificate) -> Potential:
    """Floors an optimal potential while keeping its dual objective.

    The positive plan entries define a graph H on the potential's domain. Complementary slackness
    makes the fractional part of the potential constant on each component of H, so flooring moves
    no transported mass and the objective stays unchanged.
    """
    phi = cert.potential
    plan = cert.plan
    for (u, v), mass in plan.entries.items():
        if u not in phi or v not in phi:
            raise NotOptimalInput(f"potential is undefined on plan entry ({u}, {v})")
        if mass > 0 and phi[u] - phi[v] != g.distance(u, v):
            raise NotOptimalInput(f"complementary slackness fails on plan entry ({u}, {v})")

    support_graph = nx.Graph()
    support_graph.add_nodes_from(phi.domain())
    support_graph.add_edges_from(plan.entries)
    for component in nx.connected_components(support_graph):
        fractions = {phi[v] - math.floor(phi[v]) for v in component}
        if len(fractions) > 1:
            raise InvariantViolation(f"fractional parts {sorted(fractions)} differ on one support component")

    floored = phi.floor()
    before = phi.objective(plan.source, plan.target)
    after = floored.objective(plan.source, plan.target)
    if before != after:
        raise InvariantViolation(f"flooring changed the dual objective from {before} to {after}")
    return floored


def check_certificate(g: Graph, cert: W1Certificate) -> CertificateReport:
    """Lists every way in which cert fails to witness strong duality."""
    report = CertificateReport()
    plan, phi = cert.plan, cert.potential
    mu, nu = plan.source, plan.target

    for (u, v), mass in plan.entries.items():
        if mass <= 0:
            report.add(f"plan entry ({u}, {v}) is not positive: {mass}")

    if plan.entries or mu != nu:
        rows, cols = plan.row_sums(), plan.column_sums()
        for v in sorted(set(rows) | set(mu.support)):
            if rows.get(v, Fraction(0)) != mu[v]:
                report.add(f"row sum at {v} is {rows.get(v, Fraction(0))}, source mass is {mu[v]}")
        for v in sorted(set(cols) | set(nu.support)):
            if cols.get(v, Fraction(0)) != nu[v]:
                report.add(f"column sum at {v} is {cols.get(v, Fraction(0))}, target mass is {nu[v]}")

    missing = sorted(v for v in set(mu.support) | set(nu.support) if v not in phi)
    if missing:
        report.add(f"potential is undefined on support vertices {missing}")
        return report

    for u, v in lipschitz_violations(g, phi, metric=True):
        report.add(f"potential is not 1-Lipschitz on ({u}, {v}): |{phi[u]} - {phi[v]}| > {g.distance(u, v)}")

    cost = plan.cost(g)
    if cost != cert.value:
        report.add(f"plan cost {cost} differs from value {cert.value}")
    dual = phi.objective(mu, nu)
    if dual != cert.value:
        report.add(f"dual objective {dual} differs from value {cert.value}")

    for (u, v), mass in plan.entries.items():
        if mass > 0 and u in phi and v in phi and phi[u] - phi[v] != g.distance(u, v):
            report.add(f"complementary slackness fails on ({u}, {v})")
    return report


def certificate_to_json(cert: W1Certificate) -> dict[str, Any]:
    return {
        "value": format_rational(cert.value),
        "plan": [[u, v, format_rational(m)] for (u, v), m in sorted(cert.plan.entries.items())],
        "potential": [[v, format_rational(x)] for v, x in sorted(cert.potential.values.items())],
    }
