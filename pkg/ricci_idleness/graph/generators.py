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
from enum import Enum
from typing import Optional

import numpy as np

from ricci_idleness.errors import DegenerateFamily, InvalidGeneratorSpec, TooSmall, TooSmallForIsometry, TruncationTooShallow
from ricci_idleness.graph.core import Graph, MarkedPair, build_graph, closed_ball

logger = logging.getLogger(__name__)

# Smallest torus side for which every BFS ball of radius 9 looks like the planar tiling.
HEX_MIN_SIDE = 20


class BasicKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"


@dataclass(frozen=True)
class GeneratedGraph:
    """A generated graph together with the pair it designates, if any."""

    graph: Graph
    marked: Optional[MarkedPair] = None


def gen_basic(kind: BasicKind | str, n: int) -> Graph:
    kind = BasicKind(kind)
    minimum = 3 if kind == BasicKind.CYCLE else 1
    if n < minimum:
        raise TooSmall(f"{kind.value} needs at least {minimum} vertices, got {n}")
    edges: list[tuple[int, int]]
    if kind == BasicKind.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == BasicKind.CYCLE:
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind == BasicKind.COMPLETE:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    else:
        edges = [(0, i) for i in range(1, n)]
    return build_graph(n, edges)


def gen_figure3_graph() -> MarkedPair:
    """The tree x - w - y with two pendant vertices z1, z2 hanging off y. Marked pair is (x, w)."""
    labels = ["x", "w", "y", "z1", "z2"]
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)], labels)
    return MarkedPair(g, 0, 1)


def gen_family(m: int, n: int, k: int) -> MarkedPair:
    """Builds the three-piece family G(m, n, k) with its marked pair (x, y) at distance 3.

    Vertex order: x, y, x0, x1, y0, y1, then the blocks x'_i v_i w_i y'_i for i <= m,
    x''_i z_i y''_i for i <= n and x'''_i y'''_i for i <= k.
    """
    if min(m, n, k) < 0:
        raise DegenerateFamily(f"family parameters must be non-negative, got ({m}, {n}, {k})")
    if m == n == k == 0:
        raise DegenerateFamily("G(0, 0, 0) leaves x and y with degree 2")

    labels: list[str] = ["x", "y", "x0", "x1", "y0", "y1"]
    index = {name: i for i, name in enumerate(labels)}

    def add(name: str) -> int:
        index[name] = len(labels)
        labels.append(name)
        return index[name]

    edges: list[tuple[int, int]] = []

    def path(*names: str) -> None:
        edges.extend((index[a], index[b]) for a, b in zip(names, names[1:]))

    path("x", "x0", "y0", "y")
    path("x", "x1", "y1", "y")
    for i in range(1, m + 1):
        for name in (f"x'{i}", f"v{i}", f"w{i}", f"y'{i}"):
            add(name)
        path("x", f"x'{i}", f"v{i}", f"w{i}", f"y'{i}", "y")
        path("x0", f"y'{i}")
        path(f"x'{i}", "y1")
    for i in range(1, n + 1):
        for name in (f"x''{i}", f"z{i}", f"y''{i}"):
            add(name)
        path("x", f"x''{i}", f"z{i}", f"y''{i}", "y")
        path("x0", f"y''{i}")
        path(f"x''{i}", "y1")
    for i in range(1, k + 1):
        for name in (f"x'''{i}", f"y'''{i}"):
            add(name)
        path("x", f"x'''{i}", f"y'''{i}", "y")
        path("x0", f"y'''{i}")
        path(f"x'''{i}", "y1")

    g = build_graph(len(labels), edges, labels)
    logger.debug("built G(%d, %d, %d) with %d vertices and %d edges", m, n, k, g.vertex_count, g.edge_count)
    return MarkedPair(g, index["x"], index["y"])


def gen_tree_ball(d: int, radius: int) -> tuple[Graph, int]:
    """Ball of the given radius in the infinite d-regular tree. Returns the graph and its root (always 0)."""
    if d < 2:
        raise TooSmall(f"tree degree must be at least 2, got {d}")
    if radius < 1:
        raise TooSmall(f"tree radius must be at least 1, got {radius}")
    edges: list[tuple[int, int]] = []
    frontier = [0]
    count = 1
    for depth in range(radius):
        children = d if depth == 0 else d - 1
        next_frontier: list[int] = []
        for parent in frontier:
            for _ in range(children):
                edges.append((parent, count))
                next_frontier.append(count)
                count += 1
        frontier = next_frontier
    return build_graph(count, edges), 0


def gen_tree_pair(d: int, distance: int, radius: Optional[int] = None) -> MarkedPair:
    """Pair (root, first vertex at depth `distance`) on a tree ball whose 1-balls around both are interior."""
    radius = distance + 2 if radius is None else radius
    g, root = gen_tree_ball(d, radius)
    target = next(v for v in range(g.vertex_count) if g.distance(root, v) == distance)
    for centre in (root, target):
        for v in closed_ball(g, centre):
            if g.degree(v) != d:
                raise TruncationTooShallow(
                    f"vertex {v} near the pair has degree {g.degree(v)}; radius {radius} is too small for distance {distance}"
                )
    return MarkedPair(g, root, target)


def gen_hex_torus(a: int, b: int) -> Graph:
    """Brick-wall model of the hexagonal tiling wrapped on an a x b torus.

    Vertex (i, j) has index i*b + j and is joined to (i, j-1), (i, j+1) and to (i+1, j) when
    i + j is even, (i-1, j) otherwise.
    """
    if a % 2 or b % 2 or a < HEX_MIN_SIDE or b < HEX_MIN_SIDE:
        raise TooSmallForIsometry(f"hex torus sides must be even and at least {HEX_MIN_SIDE}, got {a}x{b}")
    edges: list[tuple[int, int]] = []
    for i in range(a):
        for j in range(b):
            edges.append((i * b + j, i * b + (j + 1) % b))
            if (i + j) % 2 == 0:
                edges.append((i * b + j, ((i + 1) % a) * b + j))
    return build_graph(a * b, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product G x H. Vertex (w, z) has index w*|H| + z."""
    size = h.vertex_count
    edges: list[tuple[int, int]] = []
    for w in range(g.vertex_count):
        for z1, z2 in h.edges():
            edges.append((w * size + z1, w * size + z2))
    for z in range(size):
        for w1, w2 in g.edges():
            edges.append((w1 * size + z, w2 * size + z))
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = [f"{g.label(w)}.{h.label(z)}" for w in range(g.vertex_count) for z in range(size)]
    return build_graph(g.vertex_count * size, edges, labels)


def gen_random_connected(n: int, edge_prob: float, rng: np.random.Generator) -> Graph:
    """Random connected graph: a random recursive tree plus each remaining pair with probability edge_prob."""
    if n < 1:
        raise TooSmall(f"random graph needs at least 1 vertex, got {n}")
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < edge_prob:
                edges.add((u, v))
    return build_graph(n, sorted(edges))


def _ints(args: str, count: int, spec: str) -> list[int]:
    parts = [p for p in args.split(",") if p]
    if len(parts) != count:
        raise InvalidGeneratorSpec(f"generator '{spec}' expects {count} integer argument(s)")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InvalidGeneratorSpec(f"generator '{spec}' has a non-integer argument") from None


def generate_from_spec(spec: str) -> GeneratedGraph:
    """Parses a generator spec such as "cycle:6", "family:1,1,0", "tree:3,2", "hex:20,20",
    "figure3", "random:8,42" or "product:cycle:6*complete:3"."""
    name, _, args = spec.partition(":")
    name = name.strip().lower()
    if name in {k.value for k in BasicKind}:
        (n,) = _ints(args, 1, spec)
        return GeneratedGraph(gen_basic(name, n))
    if name == "family":
        m, n, k = _ints(args, 3, spec)
        pair = gen_family(m, n, k)
        return GeneratedGraph(pair.graph, pair)
    if name == "figure3":
        pair = gen_figure3_graph()
        return GeneratedGraph(pair.graph, pair)
    if name == "tree":
        d, radius = _ints(args, 2, spec)
        g, _ = gen_tree_ball(d, radius)
        return GeneratedGraph(g)
    if name == "treepair":
        d, distance = _ints(args, 2, spec)
        pair = gen_tree_pair(d, distance)
        return GeneratedGraph(pair.graph, pair)
    if name == "hex":
        a, b = _ints(args, 2, spec)
        return GeneratedGraph(gen_hex_torus(a, b))
    if name == "random":
        n, seed = _ints(args, 2, spec)
        return GeneratedGraph(gen_random_connected(n, 0.3, np.random.default_rng(seed)))
    if name == "product":
        left, sep, right = args.partition("*")
        if not sep:
            raise InvalidGeneratorSpec(f"product spec '{spec}' must look like product:A*B")
        return GeneratedGraph(cartesian_product(generate_from_spec(left).graph, generate_from_spec(right).graph))
    raise InvalidGeneratorSpec(f"unknown generator '{name}'")
