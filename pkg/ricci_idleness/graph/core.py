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
from functools import cached_property
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np
import numpy.typing as npt

from ricci_idleness.errors import DisconnectedSupports, IndexOutOfRange, IsolatedVertex, SameVertex, SelfLoop

logger = logging.getLogger(__name__)

UNREACHABLE = -1


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances between every pair of vertices. Unreachable pairs carry UNREACHABLE."""

    dist: npt.NDArray[np.int64]

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def reachable(self, u: int, v: int) -> bool:
        return bool(self.dist[u, v] != UNREACHABLE)

    @property
    def size(self) -> int:
        return int(self.dist.shape[0])


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    adjacency[v] is the strictly increasing tuple of neighbours of v. The networkx view and the
    BFS distance matrix are built on first use and cached on the instance.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    @cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    def distance(self, u: int, v: int) -> int:
        return self.distances(u, v)


@dataclass(frozen=True)
class MarkedPair:
    graph: Graph
    x: int
    y: int

    def __post_init__(self) -> None:
        for v in (self.x, self.y):
            if not 0 <= v < self.graph.vertex_count:
                raise IndexOutOfRange(f"vertex {v} is not in 0..{self.graph.vertex_count - 1}")
        if self.x == self.y:
            raise SameVertex(f"marked pair needs two distinct vertices, got {self.x} twice")
        if not self.graph.distances.reachable(self.x, self.y):
            raise DisconnectedSupports(f"vertices {self.x} and {self.y} lie in different components")

    @property
    def delta(self) -> int:
        return self.graph.distance(self.x, self.y)


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int]], labels: Optional[Sequence[str]] = None) -> Graph:
    """Builds a canonical Graph; repeated edges collapse into one."""
    if vertex_count < 0:
        raise IndexOutOfRange(f"vertex_count must be non-negative, got {vertex_count}")
    neighbours: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise IndexOutOfRange(f"edge ({u}, {v}) references a vertex outside 0..{vertex_count - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        neighbours[u].add(v)
        neighbours[v].add(u)
    if labels is not None and len(labels) != vertex_count:
        raise IndexOutOfRange(f"got {len(labels)} labels for {vertex_count} vertices")
    return Graph(
        vertex_count=vertex_count,
        adjacency=tuple(tuple(sorted(n)) for n in neighbours),
        labels=tuple(labels) if labels is not None else None,
    )


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    dist = np.full((g.vertex_count, g.vertex_count), UNREACHABLE, dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.nx_graph):
        for target, length in lengths.items():
            dist[source, target] = length
    logger.debug("computed %dx%d distance matrix", g.vertex_count, g.vertex_count)
    return DistanceMatrix(dist)


def validate_graph(g: Graph) -> list[str]:
    """Returns every simplicity or symmetry violation found in g. Empty means valid."""
    problems: list[str] = []
    if len(g.adjacency) != g.vertex_count:
        problems.append(f"adjacency has {len(g.adjacency)} rows for {g.vertex_count} vertices")
        return problems
    for v, row in enumerate(g.adjacency):
        if any(a >= b for a, b in zip(row, row[1:])):
            problems.append(f"adjacency of {v} is not strictly increasing")
        for u in row:
            if not 0 <= u < g.vertex_count:
                problems.append(f"vertex {v} lists out-of-range neighbour {u}")
            elif u == v:
                problems.append(f"self-loop at {v}")
            elif v not in g.adjacency[u]:
                problems.append(f"edge ({v}, {u}) is not symmetric")
    if g.labels is not None and len(g.labels) != g.vertex_count:
        problems.append("label count does not match vertex count")
    return problems


def sphere_sizes(g: Graph, source: int, radius: int) -> list[int]:
    """Sizes of the BFS spheres S_0..S_radius around source."""
    sizes = [0] * (radius + 1)
    for length in nx.single_source_shortest_path_length(g.nx_graph, source, cutoff=radius).values():
        sizes[length] += 1
    return sizes


def eccentricity(g: Graph, v: int) -> int:
    """Largest distance from v within its component."""
    farthest = int(g.distances.dist[v].max())
    if farthest <= 0:
        raise IsolatedVertex(f"vertex {v} has no other vertex in its component")
    return farthest


def closed_ball(g: Graph, v: int) -> tuple[int, ...]:
    return tuple(sorted((v, *g.adjacency[v])))


def resolve_vertex(g: Graph, token: str) -> int:
    """Maps a vertex label or a decimal index to its index."""
    if g.labels is not None and token in g.labels:
        return g.labels.index(token)
    try:
        v = int(token)
    except ValueError:
        raise IndexOutOfRange(f"unknown vertex '{token}'") from None
    if not 0 <= v < g.vertex_count:
        raise IndexOutOfRange(f"vertex {v} is not in 0..{g.vertex_count - 1}")
    return v
