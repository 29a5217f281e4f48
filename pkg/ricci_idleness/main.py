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
import multiprocessing as mp
import sys
from argparse import ArgumentParser, Namespace
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional

import yaml
from pydantic import ValidationError

from ricci_idleness.config import CommandType, OutputFormat, PairMode, PairSelectionConfig, RunConfig, SuiteName, read_config
from ricci_idleness.curvature import (
    idleness_profile,
    kappa_lly,
    kappa_p,
    profile_to_json,
    reconstruct_by_sampling,
)
from ricci_idleness.errors import CurvatureToolkitError, InvariantViolation, PairSelectionError
from ricci_idleness.graph import GeneratedGraph, Graph, MarkedPair, generate_from_spec, graph_to_json, read_graph, resolve_vertex
from ricci_idleness.logger import setup_logging
from ricci_idleness.utils import ReportFile, add_pydantic_args, format_rational, unflatten_dict
from ricci_idleness.utils.cli_parser import comma_list
from ricci_idleness.utils.cli_summary import print_check_table, print_rows_table
from ricci_idleness.utils.report_file import save_report, with_decimal_hints
from ricci_idleness.verify import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Shortcut flag -> dotted config key.
FRIENDLY_FLAGS = {
    "gen": "graph.generator",
    "graph_file": "graph.file",
    "pair": "pairs.pair",
    "pair_mode": "pairs.mode",
    "distance": "pairs.distance",
    "p": "idleness",
    "out": "output.path",
    "format": "output.format",
    "workers": "num_workers",
    "m": "verify.m",
    "n": "verify.n",
    "k": "verify.k",
    "size": "verify.hex_size",
    "count": "verify.graph_count",
    "max_vertices": "verify.max_vertices",
}

BASE_ARGS = {"config_file", "log_level", "subcommand", "suite", "decimal_hint_flag", *FRIENDLY_FLAGS}


@dataclass(frozen=True)
class PairTask:
    command: CommandType
    graph: Graph
    x: int
    y: int
    idleness: tuple[Fraction, ...]


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="ricci-idleness", allow_abbrev=False, description="Exact Ollivier-Ricci idleness functions")
    parser.add_argument("subcommand", nargs="?", choices=[c.value for c in CommandType], help="Command to run")
    parser.add_argument("suite", nargs="?", choices=[s.value for s in SuiteName], help="Suite for the verify command")
    parser.add_argument("-c", "--config_file", help="Config File", required=False)
    parser.add_argument(
        "--log-level", help="Logging level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
    )

    shortcuts = parser.add_argument_group("shortcuts")
    shortcuts.add_argument("--gen", help="Generator spec, e.g. cycle:6 or family:1,1,0")
    shortcuts.add_argument("--graph", dest="graph_file", help="Graph JSON file")
    shortcuts.add_argument("--pair", help="Explicit pair 'x,y' (labels or indices)")
    shortcuts.add_argument("--pairs", dest="pair_mode", choices=[m.value for m in PairMode], help="Pair selection mode")
    shortcuts.add_argument("--distance", type=int, help="Select every pair at this distance")
    shortcuts.add_argument("--p", type=comma_list, help="Idleness values, e.g. 0,1/2,3/4")
    shortcuts.add_argument("--out", help="Output file (stdout when omitted)")
    shortcuts.add_argument("--format", choices=[f.value for f in OutputFormat], help="Output format")
    shortcuts.add_argument("--decimal-hint", dest="decimal_hint_flag", action="store_true", help="Add decimal columns")
    shortcuts.add_argument("--workers", type=int, help="Worker processes for pair computations")
    shortcuts.add_argument("--m", type=int, help="Family parameter m")
    shortcuts.add_argument("--n", type=int, help="Family parameter n")
    shortcuts.add_argument("--k", type=int, help="Family parameter k")
    shortcuts.add_argument("--size", type=int, help="Hex torus side")
    shortcuts.add_argument("--count", type=int, help="Random graphs in the bounds suite")
    shortcuts.add_argument("--max-vertices", dest="max_vertices", type=int, help="Largest random graph in the bounds suite")

    add_pydantic_args(parser, RunConfig)
    return parser


def collect_overrides(args: Namespace) -> dict[str, Any]:
    """Merges dotted config flags and shortcut flags into one nested override dict."""
    flat = {k: v for k, v in vars(args).items() if k not in BASE_ARGS}
    for dest, key in FRIENDLY_FLAGS.items():
        value = getattr(args, dest, None)
        if value is not None:
            flat[key] = value
    if args.subcommand:
        flat["command"] = args.subcommand
    if args.suite:
        flat["verify.suite"] = args.suite
    if args.decimal_hint_flag:
        flat["output.decimal_hint"] = True
    if args.pair is not None and args.pair_mode is None:
        flat.setdefault("pairs.mode", PairMode.EXPLICIT.value)
    if args.distance is not None and args.pair_mode is None:
        flat.setdefault("pairs.mode", PairMode.DISTANCE.value)
    return unflatten_dict(flat)


def load_graph(config: RunConfig) -> GeneratedGraph:
    if config.graph.file:
        return GeneratedGraph(read_graph(config.graph.file))
    assert config.graph.generator is not None
    generated = generate_from_spec(config.graph.generator)
    logger.info(
        "Generated '%s': %d vertices, %d edges",
        config.graph.generator,
        generated.graph.vertex_count,
        generated.graph.edge_count,
    )
    return generated


def select_pairs(source: GeneratedGraph, selection: PairSelectionConfig) -> List[tuple[int, int]]:
    g = source.graph
    if selection.mode == PairMode.MARKED:
        if source.marked is None:
            raise PairSelectionError("this graph designates no pair; use --pair x,y or --pairs all|distance|edges")
        return [(source.marked.x, source.marked.y)]
    if selection.mode == PairMode.EXPLICIT:
        assert selection.pair is not None
        x, y = (resolve_vertex(g, token.strip()) for token in selection.pair.split(","))
        MarkedPair(g, x, y)
        return [(x, y)]
    if selection.mode == PairMode.EDGES:
        return g.edges()
    pairs = [
        (x, y) for x in range(g.vertex_count) for y in range(x + 1, g.vertex_count) if g.distances.reachable(x, y)
    ]
    if selection.mode == PairMode.DISTANCE:
        pairs = [(x, y) for x, y in pairs if g.distance(x, y) == selection.distance]
    return pairs


def _pair_fields(g: Graph, x: int, y: int) -> dict[str, Any]:
    return {"x": g.label(x), "y": g.label(y), "x_index": x, "y_index": y, "distance": g.distance(x, y)}


def compute_pair(task: PairTask) -> List[dict[str, Any]]:
    """Result rows for one pair. Top-level so worker processes can unpickle it."""
    g, x, y = task.graph, task.x, task.y
    base = _pair_fields(g, x, y)
    if task.command == CommandType.CURVATURE:
        return [{**base, "p": format_rational(p), "kappa": format_rational(kappa_p(g, x, y, p))} for p in task.idleness]
    if task.command == CommandType.LLY:
        return [{**base, "kappa_lly": format_rational(kappa_lly(g, x, y))}]
    if base["distance"] >= 2:
        return [{**base, "method": "profile", **profile_to_json(idleness_profile(g, x, y))}]
    function = reconstruct_by_sampling(g, x, y)
    return [
        {
            **base,
            "method": "sampling",
            "delta": base["distance"],
            "critical_points": [format_rational(p) for p in function.breakpoints[1:-1]],
            "pieces": function.pieces_json(),
        }
    ]


def compute_rows(config: RunConfig, g: Graph, pairs: List[tuple[int, int]]) -> List[dict[str, Any]]:
    tasks = [PairTask(config.command, g, x, y, tuple(config.idleness_values())) for x, y in pairs]
    logger.info("Computing %s for %d pair(s)", config.command.value, len(tasks))
    if config.num_workers > 0 and len(tasks) > 1:
        with mp.Pool(processes=config.num_workers) as pool:
            batches = pool.map(compute_pair, tasks)
    else:
        batches = [compute_pair(task) for task in tasks]
    rows = [row for batch in batches for row in batch]
    return sorted(rows, key=lambda r: (r["x_index"], r["y_index"]))


def flatten_idleness_rows(rows: List[dict[str, Any]]) -> List[dict[str, Any]]:
    """One CSV row per linear piece."""
    flat = []
    for row in rows:
        base = {k: row[k] for k in ("x", "y", "x_index", "y_index", "distance", "method")}
        for i, piece in enumerate(row["pieces"]):
            flat.append({**base, "piece": i, **piece})
    return flat


DECIMAL_KEYS = ["p", "kappa", "kappa_lly", "from", "to", "slope", "intercept"]


def build_report(config: RunConfig, rows: List[dict[str, Any]]) -> ReportFile:
    name = config.command.value
    if config.output.format == OutputFormat.CSV:
        if config.command == CommandType.IDLENESS:
            rows = flatten_idleness_rows(rows)
        if config.output.decimal_hint:
            rows = [with_decimal_hints(row, DECIMAL_KEYS) for row in rows]
        return ReportFile(name, rows, file_type="csv")
    if config.output.decimal_hint and config.command != CommandType.IDLENESS:
        rows = [with_decimal_hints(row, DECIMAL_KEYS) for row in rows]
    return ReportFile(name, rows)


def run_verify(config: RunConfig) -> int:
    result = run_suite(config.verify, config.seed)
    checks = [c.to_json() for c in result.checks]
    print_check_table(f"verify {result.suite}", checks)
    if config.output.format == OutputFormat.CSV:
        report = ReportFile(f"verify_{result.suite}", checks, file_type="csv")
    else:
        report = ReportFile(f"verify_{result.suite}", result.to_json())
    save_report(report, config.output.path)
    if not result.passed:
        for check in result.failures():
            logger.error("FAIL %s: expected %s, computed %s", check.name, check.expected, check.computed)
        return EXIT_FAILED
    return EXIT_OK


def run(config: RunConfig) -> int:
    if config.command == CommandType.VERIFY:
        return run_verify(config)

    source = load_graph(config)
    if config.command == CommandType.GEN:
        save_report(ReportFile("graph", graph_to_json(source.graph)), config.output.path)
        return EXIT_OK

    pairs = select_pairs(source, config.pairs)
    if not pairs:
        logger.warning("No pairs matched the selection %s", config.pairs.model_dump(mode="json"))
    rows = compute_rows(config, source.graph, pairs)
    columns = {
        CommandType.CURVATURE: ["x", "y", "distance", "p", "kappa"],
        CommandType.LLY: ["x", "y", "distance", "kappa_lly"],
        CommandType.IDLENESS: ["x", "y", "distance", "method", "critical_points"],
    }[config.command]
    print_rows_table(config.command.value, rows, columns)
    save_report(build_report(config, rows), config.output.path)
    return EXIT_OK


def run_cli(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.log_level)

    try:
        config = read_config(args.config_file, collect_overrides(args))
    except ValidationError as e:
        logger.error("Invalid configuration:\n%s", e)
        return EXIT_USAGE
    except (OSError, yaml.YAMLError) as e:
        logger.error("Could not read config file: %s", e)
        return EXIT_USAGE

    try:
        return run(config)
    except InvariantViolation as e:
        logger.error("Invariant violated: %s", e)
        return EXIT_FAILED
    except CurvatureToolkitError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_USAGE


def main_cli() -> None:
    # Set multiprocessing start method to 'fork' on macOS so worker processes inherit loaded graphs
    if sys.platform == "darwin":
        try:
            mp.set_start_method("fork", force=True)
        except RuntimeError:
            # Start method already set, ignore
            pass
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main_cli()
