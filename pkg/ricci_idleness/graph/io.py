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
import json
import logging
from pathlib import Path
from typing import Any

from ricci_idleness.errors import IndexOutOfRange
from ricci_idleness.graph.core import Graph, build_graph

logger = logging.getLogger(__name__)


def graph_to_json(g: Graph) -> dict[str, Any]:
    """Canonical JSON form: edges with u < v in lexicographic order."""
    data: dict[str, Any] = {"n": g.vertex_count, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        data["labels"] = list(g.labels)
    return data


def graph_from_json(data: dict[str, Any]) -> Graph:
    if "n" not in data or "edges" not in data:
        raise IndexOutOfRange("graph JSON needs both 'n' and 'edges'")
    edges = [(int(u), int(v)) for u, v in data["edges"]]
    return build_graph(int(data["n"]), edges, data.get("labels"))


def read_graph(path: str | Path) -> Graph:
    with open(path, "r") as f:
        g = graph_from_json(json.load(f))
    logger.info("Loaded graph from %s: %d vertices, %d edges", path, g.vertex_count, g.edge_count)
    return g


def write_graph(g: Graph, path: str | Path) -> None:
    with open(path, "w") as f:
        f.write(dumps_graph(g))
    logger.info("Wrote graph with %d vertices to %s", g.vertex_count, path)


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_json(g), indent=2) + "\n"
