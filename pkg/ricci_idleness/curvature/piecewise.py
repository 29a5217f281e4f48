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
import bisect
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from ricci_idleness.curvature.kappa import kappa_p
from ricci_idleness.curvature.profile import IdlenessProfile, critical_points, evaluate_profile
from ricci_idleness.errors import InvariantViolation, MoreThanThreePieces, NotConcave
from ricci_idleness.graph.core import Graph, MarkedPair
from ricci_idleness.utils.rational import format_rational

logger = logging.getLogger(__name__)

MAX_PIECES = 3


@dataclass(frozen=True)
class Piece:
    start: Fraction
    end: Fraction
    slope: Fraction
    intercept: Fraction

    def to_json(self) -> dict[str, str]:
        return {
            "from": format_rational(self.start),
            "to": format_rational(self.end),
            "slope": format_rational(self.slope),
            "intercept": format_rational(self.intercept),
        }


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear function on [breakpoints[0], breakpoints[-1]]."""

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.breakpoints) != len(self.values) or len(self.breakpoints) < 2:
            raise InvariantViolation("a piecewise-linear function needs matching breakpoints and values, at least two")
        if any(a >= b for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise InvariantViolation("breakpoints must be strictly increasing")

    @classmethod
    def from_samples(cls, samples: Iterable[tuple[Fraction, Fraction]]) -> "PiecewiseLinear":
        """Interpolates the samples and merges collinear neighbouring segments."""
        ordered = sorted(dict(samples).items())
        return cls(tuple(p for p, _ in ordered), tuple(v for _, v in ordered)).collapsed()

    def slopes(self) -> list[Fraction]:
        return [
            (v1 - v0) / (p1 - p0)
            for (p0, v0), (p1, v1) in zip(zip(self.breakpoints, self.values), zip(self.breakpoints[1:], self.values[1:]))
        ]

    def collapsed(self) -> "PiecewiseLinear":
        slopes = self.slopes()
        keep = [0]
        for i in range(1, len(self.breakpoints) - 1):
            if slopes[i - 1] != slopes[i]:
                keep.append(i)
        keep.append(len(self.breakpoints) - 1)
        return PiecewiseLinear(tuple(self.breakpoints[i] for i in keep), tuple(self.values[i] for i in keep))

    def pieces(self) -> list[Piece]:
        result = []
        for i, slope in enumerate(self.slopes()):
            start, end = self.breakpoints[i], self.breakpoints[i + 1]
            result.append(Piece(start, end, slope, self.values[i] - slope * start))
        return result

    def is_concave(self) -> bool:
        slopes = self.slopes()
        return all(a >= b for a, b in zip(slopes, slopes[1:]))

    def evaluate(self, p: Fraction) -> Fraction:
        p = Fraction(p)
        if not self.breakpoints[0] <= p <= self.breakpoints[-1]:
            raise InvariantViolation(f"{p} lies outside [{self.breakpoints[0]}, {self.breakpoints[-1]}]")
        i = min(max(bisect.bisect_right(self.breakpoints, p) - 1, 0), len(self.breakpoints) - 2)
        piece = self.pieces()[i]
        return piece.slope * p + piece.intercept

    def pieces_json(self) -> list[dict[str, str]]:
        return [piece.to_json() for piece in self.pieces()]


def profile_function(profile: IdlenessProfile) -> PiecewiseLinear:
    """p -> kappa_p(x, y) on [0, 1] as a piecewise-linear function."""
    points = [Fraction(0), *critical_points(profile), Fraction(1)]
    return PiecewiseLinear.from_samples((p, evaluate_profile(profile, p)) for p in points)


def profile_to_json(profile: IdlenessProfile) -> dict[str, Any]:
    return {
        "delta": profile.delta,
        "c": [format_rational(c) for c in profile.intercepts],
        "critical_points": [format_rational(p) for p in critical_points(profile)],
        "pieces": profile_function(profile).pieces_json(),
    }


def candidate_breakpoints(lcm: int) -> list[Fraction]:
    """0, 1, every a/(a + lcm) for a = 1..lcm, and the midpoints between consecutive candidates."""
    grid = sorted({Fraction(0), Fraction(1), *(Fraction(a, a + lcm) for a in range(1, lcm + 1))})
    midpoints = [(a + b) / 2 for a, b in zip(grid, grid[1:])]
    return sorted(grid + midpoints)


def farey_grid(max_denominator: int) -> list[Fraction]:
    return sorted({Fraction(a, b) for b in range(1, max_denominator + 1) for a in range(b + 1)})


def _fits(function: PiecewiseLinear) -> bool:
    return len(function.pieces()) <= MAX_PIECES and function.is_concave()


def reconstruct_by_sampling(g: Graph, x: int, y: int) -> PiecewiseLinear:
    """Recovers p -> kappa_p(x, y) from exact samples. Works for adjacent pairs too.

    Samples sit at the candidate breakpoints a/(a + l), l = lcm(d_x, d_y), and between them. If
    the interpolant is not concave with at most three pieces, a Farey grid of denominator 4l is
    sampled instead before giving up.
    """
    MarkedPair(g, x, y)
    lcm = math.lcm(g.degree(x), g.degree(y))
    samples = {p: kappa_p(g, x, y, p) for p in candidate_breakpoints(lcm)}
    function = PiecewiseLinear.from_samples(samples.items())
    if not _fits(function):
        logger.warning("candidate grid for (%d, %d) gave %d pieces; sampling a Farey grid", x, y, len(function.pieces()))
        for p in farey_grid(4 * lcm):
            if p not in samples:
                samples[p] = kappa_p(g, x, y, p)
        function = PiecewiseLinear.from_samples(samples.items())
    if len(function.pieces()) > MAX_PIECES:
        raise MoreThanThreePieces(f"curvature of ({x}, {y}) has {len(function.pieces())} linear pieces")
    if not function.is_concave():
        raise NotConcave(f"curvature of ({x}, {y}) is not concave in the idleness")
    return function
