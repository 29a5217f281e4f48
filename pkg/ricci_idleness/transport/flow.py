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
"""Exact integer min-cost transshipment by successive shortest paths."""

import heapq
import logging
from dataclasses import dataclass
from typing import Optional

from ricci_idleness.errors import InfeasibleFlow

logger = logging.getLogger(__name__)


@dataclass
class Arc:
    tail: int
    head: int
    cost: int
    capacity: Optional[int]


@dataclass(frozen=True)
class FlowSolution:
    """Optimal flow with node potentials.

    For every arc with spare capacity, potentials[head] - potentials[tail] <= cost, with equality on
    arcs that carry flow. These are the optimal duals of the transshipment problem.
    """

    cost: int
    flows: tuple[int, ...]
    potentials: tuple[int, ...]


class MinCostFlowNetwork:
    """Network on nodes 0..node_count-1 with integer costs and supplies.

    Positive supply means the node emits flow, negative supply means it absorbs it. Arcs without a
    capacity are uncapacitated. Negative arc costs are allowed as long as no negative cycle exists.
    Ties in the shortest path search are broken towards lower node indices, so the result is
    deterministic.
    """

    def __init__(self, node_count: int):
        self.node_count = node_count
        self.arcs: list[Arc] = []
        self.supply = [0] * node_count

    def add_arc(self, tail: int, head: int, cost: int, capacity: Optional[int] = None) -> int:
        self.arcs.append(Arc(tail, head, cost, capacity))
        return len(self.arcs) - 1

    def set_supply(self, node: int, amount: int) -> None:
        self.supply[node] += amount

    def solve(self) -> FlowSolution:
        if sum(self.supply) != 0:
            raise InfeasibleFlow(f"supplies do not balance (net {sum(self.supply)})")
        total = sum(s for s in self.supply if s > 0)
        source, sink = self.node_count, self.node_count + 1
        size = self.node_count + 2

        # Residual graph stored as paired arcs: arc 2i is forward, 2i+1 its reverse.
        heads: list[int] = []
        costs: list[int] = []
        residual: list[int] = []
        out: list[list[int]] = [[] for _ in range(size)]

        def link(tail: int, head: int, cost: int, capacity: int) -> None:
            out[tail].append(len(heads))
            heads.append(head)
            costs.append(cost)
            residual.append(capacity)
            out[head].append(len(heads))
            heads.append(tail)
            costs.append(-cost)
            residual.append(0)

        # One spare unit keeps uncapacitated arcs in the residual graph, so their dual constraint always holds.
        for arc in self.arcs:
            link(arc.tail, arc.head, arc.cost, total + 1 if arc.capacity is None else arc.capacity)
        for node, amount in enumerate(self.supply):
            if amount > 0:
                link(source, node, 0, amount)
            elif amount < 0:
                link(node, sink, 0, -amount)

        potential = self._initial_potentials(size, heads, costs, residual, out)
        shipped = 0
        augmentations = 0
        while shipped < total:
            dist, parent = self._dijkstra(source, size, heads, costs, residual, out, potential)
            if dist[sink] is None:
                raise InfeasibleFlow(f"only {shipped} of {total} units can reach their destination")
            finite = [d for d in dist if d is not None]
            farthest = max(finite)
            for v in range(size):
                d = dist[v]
                potential[v] += farthest if d is None else d

            bottleneck = total - shipped
            v = sink
            while v != source:
                a = parent[v]
                bottleneck = min(bottleneck, residual[a])
                v = heads[a ^ 1]
            v = sink
            while v != source:
                a = parent[v]
                residual[a] -= bottleneck
                residual[a ^ 1] += bottleneck
                v = heads[a ^ 1]
            shipped += bottleneck
            augmentations += 1

        flows = tuple(residual[2 * i + 1] for i in range(len(self.arcs)))
        cost = sum(f * arc.cost for f, arc in zip(flows, self.arcs))
        logger.debug(
            "min-cost flow: %d nodes, %d arcs, %d units in %d augmentations, cost %d",
            self.node_count,
            len(self.arcs),
            total,
            augmentations,
            cost,
        )
        base = potential[: self.node_count]
        return FlowSolution(cost=cost, flows=flows, potentials=tuple(base))

    @staticmethod
    def _initial_potentials(
        size: int, heads: list[int], costs: list[int], residual: list[int], out: list[list[int]]
    ) -> list[int]:
        # Bellman-Ford from a virtual root joined to every node at cost 0.
        dist = [0] * size
        for _ in range(size):
            changed = False
            for tail in range(size):
                for a in out[tail]:
                    if residual[a] > 0 and dist[tail] + costs[a] < dist[heads[a]]:
                        dist[heads[a]] = dist[tail] + costs[a]
                        changed = True
            if not changed:
                return dist
        raise InfeasibleFlow("network contains a negative-cost cycle")

    @staticmethod
    def _dijkstra(
        source: int,
        size: int,
        heads: list[int],
        costs: list[int],
        residual: list[int],
        out: list[list[int]],
        potential: list[int],
    ) -> tuple[list[Optional[int]], list[int]]:
        dist: list[Optional[int]] = [None] * size
        parent = [-1] * size
        done = [False] * size
        dist[source] = 0
        heap = [(0, source)]
        while heap:
            d, tail = heapq.heappop(heap)
            if done[tail]:
                continue
            done[tail] = True
            for a in out[tail]:
                if residual[a] <= 0:
                    continue
                head = heads[a]
                reduced = d + costs[a] + potential[tail] - potential[head]
                current = dist[head]
                if not done[head] and (current is None or reduced < current):
                    dist[head] = reduced
                    parent[head] = a
                    heapq.heappush(heap, (reduced, head))
        return dist, parent
