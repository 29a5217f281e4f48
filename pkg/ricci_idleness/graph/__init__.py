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
from .core import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    MarkedPair,
    all_pairs_distances,
    build_graph,
    closed_ball,
    eccentricity,
    resolve_vertex,
    sphere_sizes,
    validate_graph,
)
from .generators import (
    BasicKind,
    GeneratedGraph,
    cartesian_product,
    gen_basic,
    gen_family,
    gen_figure3_graph,
    gen_hex_torus,
    gen_random_connected,
    gen_tree_ball,
    gen_tree_pair,
    generate_from_spec,
)
from .io import dumps_graph, graph_from_json, graph_to_json, read_graph, write_graph

__all__ = [
    "UNREACHABLE",
    "DistanceMatrix",
    "Graph",
    "MarkedPair",
    "all_pairs_distances",
    "build_graph",
    "closed_ball",
    "eccentricity",
    "resolve_vertex",
    "sphere_sizes",
    "validate_graph",
    "BasicKind",
    "GeneratedGraph",
    "cartesian_product",
    "gen_basic",
    "gen_family",
    "gen_figure3_graph",
    "gen_hex_torus",
    "gen_random_connected",
    "gen_tree_ball",
    "gen_tree_pair",
    "generate_from_spec",
    "dumps_graph",
    "graph_from_json",
    "graph_to_json",
    "read_graph",
    "write_graph",
]
