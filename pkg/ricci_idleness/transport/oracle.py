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
from fractions import Fraction
from typing import Optional

import networkx as nx

from ricci_idleness.errors import DisconnectedSupports, TooLargeForOracle
from ricci_idleness.graph.core import Graph
from ricci_idleness.transport.measures import Measure

logger = logging.getLogger(__name__)

ORACLE_MAX_VERTICES = 12


def oracle_w1_enum(g: Graph, mu: Measure, nu: Measure, anchor: Optional[int] = None) -> Fraction:
    """W1 by exhaustive search over integer 1-Lipschitz potentials pinned to 0 at the anchor.

    Integer optimal potentials always exist, so the maximum of sum_v phi(v) (mu(v) - nu(v)) over
    this finite family is the exact distance. Only meant as an independent check on small graphs.
    """
    if g.vertex_count > ORACLE_MAX_VERTICES:
        raise TooLargeForOracle(f"oracle handles at most {ORACLE_MAX_VERTICES} vertices, got {g.vertex_count}")
    if anchor is None:
        anchor = nu.vertices()[0]

    order = [anchor, *(v for _, v in nx.bfs_edges(g.nx_graph, anchor))]
    position = {v: i for i, v in enumerate(order)}
    for v in (*mu.support, *nu.support):
        if v not in position:
            raise DisconnectedSupports(f"support vertex {v} is not connected to anchor {anchor}")

    scale = math.lcm(mu.common_denominator(), nu.common_denominator())
    weights = [int((mu[v] - nu[v]) * scale) for v in order]
    radius = [g.distance(v, anchor) for v in order]
    earlier = [[position[u] for u in g.neighbors(v) if position[u] < i] for i, v in enumerate(order)]

    # Best value the unassigned suffix could still add if every vertex sat at the edge of its range.
    headroom = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        headroom[i] = headroom[i + 1] + abs(weights[i]) * radius[i]

    values = [0] * len(order)
    best = 0
    visited = 0

    def assign(i: int, partial: int) -> None:
        nonlocal best, visited
        if i == len(order):
            visited += 1
            best = max(best, partial)
            return
        if partial + headroom[i] <= best:
            return
        lo, hi = -radius[i], radius[i]
        for j in earlier[i]:
            lo = max(lo, values[j] - 1)
            hi = min(hi, values[j] + 1)
        # Try the values that help the objective first.
        candidates = range(hi, lo - 1, -1) if weights[i] >= 0 else range(lo, hi + 1)
        for value in candidates:
            values[i] = value
            assign(i + 1, partial + weights[i] * value)

    values[0] = 0
    assign(1, 0)
    logger.debug("oracle visited %d complete potentials on %d vertices", visited, len(order))
    return Fraction(best, scale)
