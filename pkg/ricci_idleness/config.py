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
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

from ricci_idleness.errors import CurvatureToolkitError
from ricci_idleness.utils.rational import format_rational, parse_rational


class CommandType(str, Enum):
    CURVATURE = "curvature"
    IDLENESS = "idleness"
    LLY = "lly"
    VERIFY = "verify"
    GEN = "gen"


class GraphSourceConfig(BaseModel):
    file: Optional[str] = Field(default=None, description="Path to a graph JSON file")
    generator: Optional[str] = Field(
        default=None, description="Generator spec, e.g. cycle:6, family:1,1,0, figure3, tree:3,2, hex:20,20, product:A*B"
    )

    @model_validator(mode="after")
    def check_single_source(self) -> "GraphSourceConfig":
        if self.file and self.generator:
            raise ValueError("Graph source takes either 'file' or 'generator', not both")
        return self

    @property
    def is_set(self) -> bool:
        return bool(self.file or self.generator)


class PairMode(str, Enum):
    MARKED = "marked"
    EXPLICIT = "explicit"
    ALL = "all"
    DISTANCE = "distance"
    EDGES = "edges"


class PairSelectionConfig(BaseModel):
    mode: PairMode = Field(default=PairMode.MARKED, description="Which vertex pairs to evaluate")
    pair: Optional[str] = Field(default=None, description="Explicit pair 'x,y' given by labels or indices")
    distance: Optional[int] = Field(default=None, description="Distance of the pairs selected in distance mode")

    @model_validator(mode="after")
    def check_mode_arguments(self) -> "PairSelectionConfig":
        if self.mode == PairMode.EXPLICIT and not self.pair:
            raise ValueError("Pair mode 'explicit' requires 'pair' (e.g. 'x,y' or '0,3')")
        if self.pair is not None and len(self.pair.split(",")) != 2:
            raise ValueError(f"Pair '{self.pair}' must name exactly two vertices separated by a comma")
        if self.mode == PairMode.DISTANCE and (self.distance is None or self.distance < 1):
            raise ValueError("Pair mode 'distance' requires a positive 'distance'")
        return self


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class OutputConfig(BaseModel):
    path: Optional[str] = Field(default=None, description="Output file; stdout when unset")
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Artifact format")
    decimal_hint: bool = Field(default=False, description="Add 12-digit decimal columns next to rational values")


class SuiteName(str, Enum):
    FAMILY = "family"
    HEXAGON = "hexagon"
    TREE = "tree"
    PRODUCT = "product"
    BOUNDS = "bounds"
    FIGURE3 = "figure3"


class VerifyConfig(BaseModel):
    suite: SuiteName = Field(default=SuiteName.FAMILY, description="Reproduction suite to run")
    m: Optional[int] = Field(default=None, ge=0, description="Family parameter m; all of m, n, k unset runs the full sweep")
    n: Optional[int] = Field(default=None, ge=0, description="Family parameter n")
    k: Optional[int] = Field(default=None, ge=0, description="Family parameter k")
    hex_size: int = Field(default=20, ge=20, description="Side of the hexagonal torus")
    graph_count: int = Field(default=300, ge=1, description="Random graphs in the bounds suite")
    oracle_count: int = Field(default=200, ge=0, description="Random graphs cross-checked against the enumeration oracle")
    max_vertices: int = Field(default=10, ge=3, le=12, description="Largest random graph in the bounds suite")

    @model_validator(mode="after")
    def check_family_parameters(self) -> "VerifyConfig":
        given = [v is not None for v in (self.m, self.n, self.k)]
        if any(given) and not all(given):
            raise ValueError("Family parameters m, n and k must be given together")
        return self

    @property
    def family(self) -> Optional[tuple[int, int, int]]:
        if self.m is None or self.n is None or self.k is None:
            return None
        return self.m, self.n, self.k


class RunConfig(BaseModel):
    command: CommandType = Field(default=CommandType.CURVATURE, description="Subcommand to run")
    graph: GraphSourceConfig = GraphSourceConfig()
    pairs: PairSelectionConfig = PairSelectionConfig()
    idleness: list[str] = Field(default=["0", "1/2"], description="Idleness values as exact rationals ('num/den' or integers)")
    output: OutputConfig = OutputConfig()
    verify: VerifyConfig = VerifyConfig()
    seed: int = Field(default=0, description="Seed for random graph suites")
    num_workers: int = Field(default=0, ge=0, description="Worker processes for pair computations; 0 runs inline")

    @field_validator("idleness", mode="before")
    @classmethod
    def check_idleness(cls, values: Any) -> list[str]:
        if isinstance(values, int):
            values = [values]
        elif isinstance(values, str):
            values = [v for v in values.split(",") if v.strip()]
        canonical = []
        for value in values:
            try:
                p = parse_rational(str(value))
            except CurvatureToolkitError as e:
                raise ValueError(str(e)) from None
            if not 0 <= p <= 1:
                raise ValueError(f"Idleness {value} is outside [0, 1]")
            canonical.append(format_rational(p))
        if not canonical:
            raise ValueError("At least one idleness value is required")
        return canonical

    @model_validator(mode="after")
    def check_graph_source(self) -> "RunConfig":
        if self.command != CommandType.VERIFY and not self.graph.is_set:
            raise ValueError(f"Command '{self.command.value}' needs a graph: set graph.file or graph.generator")
        return self

    def idleness_values(self) -> list[Fraction]:
        return [parse_rational(v) for v in self.idleness]


def deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    result = base.copy()
    for k, v in override.items():
        if k in result and isinstance(result[k], dict) and isinstance(v, dict):
            result[k] = deep_merge(result[k], v)
        else:
            result[k] = v
    return result


def default_config_dict() -> dict[str, Any]:
    # RunConfig() itself would fail validation without a graph source.
    return RunConfig.model_construct().model_dump(mode="json")


def read_config(config_file: Optional[str] = None, cli_overrides: Optional[dict[str, Any]] = None) -> RunConfig:
    logger = logging.getLogger(__name__)
    cfg: dict[str, Any] = {}
    if config_file:
        logger.info("Using configuration from: %s", config_file)
        with open(config_file, "r") as stream:
            cfg = yaml.safe_load(stream) or {}

    merged_cfg = deep_merge(default_config_dict(), cfg)
    if cli_overrides:
        merged_cfg = deep_merge(merged_cfg, cli_overrides)

    logger.info("Running with the following config:\n\n%s\n", yaml.dump(merged_cfg, sort_keys=False, default_flow_style=False))
    return RunConfig(**merged_cfg)
