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
"""Reproduction suites behind `ricci-idleness verify`.

Each suite rebuilds one family of worked examples from exact computations and records every
comparison as a CheckResult, so a failing run says which value differed and by how much.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np
from tqdm import tqdm

from ricci_idleness.config import SuiteName, VerifyConfig
from ricci_idleness.curvature import (
    BoundReport,
    bonnet_myers_check,
    check_critical_bounds,
    critical_points,
    evaluate_profile,
    idleness_profile,
    kappa_lly,
    kappa_p,
    lly_from_profile,
    optimal_potential_gap,
    positive_pair_witness,
    product_formula_rhs,
    profile_function,
    reconstruct_by_sampling,
)
from ricci_idleness.errors import CurvatureToolkitError
from ricci_idleness.graph import (
    Graph,
    cartesian_product,
    gen_basic,
    gen_family,
    gen_figure3_graph,
    gen_hex_torus,
    gen_random_connected,
    gen_tree_pair,
    sphere_sizes,
)
from ricci_idleness.transport import check_certificate, integerize_potential, lazy_measure, lipschitz_violations, oracle_w1_enum, w1
from ricci_idleness.utils.rational import format_rational
from ricci_idleness.verify.checks import CheckResult, SuiteResult

logger = logging.getLogger(__name__)

FAMILY_CASES = [(1, 1, 1), (2, 1, 0), (1, 1, 0), (1, 2, 3), (3, 0, 2), (0, 2, 1)]
SHARPNESS_SIZES = [4, 5, 6]
HEX_IDLENESS = [Fraction(0), Fraction(1, 4), Fraction(1, 2)]
HEX_SPHERE_RADIUS = 7
HEX_BALL_RADIUS = 9
TREE_DEGREES = [3, 4]
TREE_DISTANCES = [1, 2, 3]
TREE_IDLENESS = [Fraction(0), Fraction(1, 2), Fraction(3, 4)]
PRODUCT_FACTORS = [(("cycle", 6), ("complete", 3)), (("cycle", 4), ("cycle", 4)), (("complete", 4), ("cycle", 6))]
PRODUCT_IDLENESS = [Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)]
PRODUCT_RANDOM_PAIRS = 10
ORACLE_IDLENESS = [Fraction(0), Fraction(1, 7), Fraction(1, 3), Fraction(1, 2), Fraction(9, 10)]
GAP_IDLENESS = [Fraction(3, 5), Fraction(3, 4), Fraction(9, 10)]
FIGURE3_LLY = {
    ("x", "w"): Fraction(1),
    ("w", "y"): Fraction(-1, 3),
    ("y", "z1"): Fraction(2, 3),
    ("y", "z2"): Fraction(2, 3),
    ("x", "y"): Fraction(1, 3),
    ("x", "z1"): Fraction(2, 3),
    ("x", "z2"): Fraction(2, 3),
}


def bound_checks(report: BoundReport) -> Iterator[CheckResult]:
    for c in report.checks:
        yield CheckResult(c.name, format_rational(c.rhs), format_rational(c.lhs), c.passed)


def family_intercepts(m: int, n: int, k: int) -> tuple[Fraction, Fraction, Fraction]:
    d = 2 + m + n + k
    return Fraction(3 * m + 2 * n + k + 2, d), Fraction(2 * m + 2 * n + k + 2, d), Fraction(1)


def family_critical_points(m: int, n: int, k: int) -> tuple[Fraction, Fraction]:
    d = 2 + m + n + k
    return Fraction(m, d + m), Fraction(m + n, d + m + n)


def _family_case(result: SuiteResult, m: int, n: int, k: int) -> None:
    name = f"G({m},{n},{k})"
    pair = gen_family(m, n, k)
    g, x, y = pair.graph, pair.x, pair.y
    profile = idleness_profile(g, x, y)

    result.expect_equal(f"{name} distance", 3, profile.delta)
    result.expect_equal(f"{name} c", family_intercepts(m, n, k), profile.intercepts)
    p1, p2 = family_critical_points(m, n, k)
    result.expect_equal(f"{name} p1", p1, profile.p1)
    result.expect_equal(f"{name} p2", p2, profile.p2)
    result.expect_equal(f"{name} lly from last line", kappa_lly(g, x, y), lly_from_profile(profile))
    result.extend(name, bound_checks(check_critical_bounds(profile)))

    function = profile_function(profile)
    expected_pieces = len({p for p in (p1, p2) if 0 < p < 1}) + 1
    result.expect_equal(f"{name} pieces", expected_pieces, len(function.pieces()))
    sampled = reconstruct_by_sampling(g, x, y)
    result.expect_equal(f"{name} sampled breakpoints", list(function.breakpoints), list(sampled.breakpoints))

    grid = [Fraction(i, 20) for i in range(21)]
    agree = sum(evaluate_profile(profile, p) == kappa_p(g, x, y, p) for p in grid)
    result.tally(f"{name} profile matches direct kappa_p", agree, len(grid))


def run_family(verify: VerifyConfig, seed: int) -> SuiteResult:
    result = SuiteResult(SuiteName.FAMILY.value)
    if verify.family is not None:
        _family_case(result, *verify.family)
        return result

    for m, n, k in FAMILY_CASES:
        _family_case(result, m, n, k)

    for d in SHARPNESS_SIZES:
        for n in range(d - 1):
            m = d - 2 - n
            pair = gen_family(m, n, 0)
            profile = idleness_profile(pair.graph, pair.x, pair.y)
            expected = Fraction(d - 2, 2 * d - 2)
            result.expect_equal(f"sharpness G({m},{n},0) p2", expected, profile.p2)
            upper = check_critical_bounds(profile).get(f"critical_upper[{format_rational(profile.p2)}]")
            result.expect_true(f"sharpness G({m},{n},0) upper bound attained", upper.tight, f"{upper.lhs} <= {upper.rhs}")
    return result


def run_hexagon(verify: VerifyConfig, seed: int) -> SuiteResult:
    result = SuiteResult(SuiteName.HEXAGON.value)
    size = verify.hex_size
    g = gen_hex_torus(size, size)
    logger.info("hex torus %dx%d: %d vertices, %d edges", size, size, g.vertex_count, g.edge_count)

    planar = [1] + [3 * r for r in range(1, HEX_BALL_RADIUS + 1)]
    result.expect_equal("sphere sizes around 0", planar, sphere_sizes(g, 0, HEX_BALL_RADIUS))
    dist = g.distances.dist
    uniform = all(bool(np.all((dist == r).sum(axis=1) == planar[r])) for r in range(HEX_BALL_RADIUS + 1))
    result.expect_true("sphere sizes agree at every vertex", uniform)

    edges = g.edges()
    for p in HEX_IDLENESS:
        expected = Fraction(-2, 3) * (1 - p)
        values = {kappa_p(g, u, v, p) for u, v in tqdm(edges, desc=f"hex edges p={p}", leave=False)}
        result.expect_equal(f"edge curvature p={p}", {expected}, values)

    sphere = [v for v in range(g.vertex_count) if g.distance(0, v) == HEX_SPHERE_RADIUS]
    for p in HEX_IDLENESS:
        magnitude = Fraction(2, 21) * (1 - p)
        values = {kappa_p(g, 0, v, p) for v in sphere}
        result.expect_equal(f"distance-{HEX_SPHERE_RADIUS} curvature p={p}", {magnitude, -magnitude}, values)
    return result


def run_tree(verify: VerifyConfig, seed: int) -> SuiteResult:
    result = SuiteResult(SuiteName.TREE.value)
    for d in TREE_DEGREES:
        for distance in TREE_DISTANCES:
            pair = gen_tree_pair(d, distance)
            for p in TREE_IDLENESS:
                expected = Fraction(4 - 2 * d, d * distance) * (1 - p)
                computed = kappa_p(pair.graph, pair.x, pair.y, p)
                result.expect_equal(f"T{d} distance {distance} p={p}", expected, computed)
    return result


def _product_pairs(g: Graph, h: Graph, rng: np.random.Generator) -> list[tuple[int, int]]:
    size = h.vertex_count
    pairs = [(0, 2 * size + 1), (0, 1), (0, size)]
    while len(pairs) < PRODUCT_RANDOM_PAIRS + 3:
        a, b = (int(v) for v in rng.choice(g.vertex_count * size, size=2, replace=False))
        pairs.append((a, b))
    return pairs


def run_product(verify: VerifyConfig, seed: int) -> SuiteResult:
    result = SuiteResult(SuiteName.PRODUCT.value)
    rng = np.random.default_rng(seed)
    for (g_kind, g_size), (h_kind, h_size) in PRODUCT_FACTORS:
        g, h = gen_basic(g_kind, g_size), gen_basic(h_kind, h_size)
        name = f"{g_kind}{g_size}x{h_kind}{h_size}"
        product = cartesian_product(g, h)
        size = h.vertex_count

        expected_metric = (g.distances.dist[:, None, :, None] + h.distances.dist[None, :, None, :]).reshape(
            product.vertex_count, product.vertex_count
        )
        result.expect_true(f"{name} metric is the sum of factor metrics", bool(np.array_equal(expected_metric, product.distances.dist)))

        dg, dh = g.degree(0), h.degree(0)
        matches: dict[str, int] = defaultdict(int)
        pairs = _product_pairs(g, h, rng)
        for a, b in pairs:
            (x1, y1), (x2, y2) = divmod(a, size), divmod(b, size)
            dx, dy = g.distance(x1, x2), h.distance(y1, y2)
            for p in PRODUCT_IDLENESS:
                kg = kappa_p(g, x1, x2, p) if dx else Fraction(0)
                kh = kappa_p(h, y1, y2, p) if dy else Fraction(0)
                rhs = product_formula_rhs(kg, kh, dg, dh, dx, dy)
                direct = kappa_p(product, a, b, p)
                if rhs == direct:
                    matches[f"p={p}"] += 1
                else:
                    logger.warning("%s pair (%d, %d) p=%s: direct %s, formula %s", name, a, b, p, direct, rhs)
            kg = kappa_lly(g, x1, x2) if dx else Fraction(0)
            kh = kappa_lly(h, y1, y2) if dy else Fraction(0)
            if product_formula_rhs(kg, kh, dg, dh, dx, dy) == kappa_lly(product, a, b):
                matches["lly"] += 1
        for key in [f"p={p}" for p in PRODUCT_IDLENESS] + ["lly"]:
            result.tally(f"{name} product formula {key}", matches[key], len(pairs))
    return result


class _Tally:
    def __init__(self) -> None:
        self.counts: dict[str, list[int]] = {}

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        passed, total = self.counts.setdefault(name, [0, 0])
        self.counts[name] = [passed + int(ok), total + 1]
        if not ok:
            logger.warning("%s failed: %s", name, detail)

    def check(self, name: str, fn: Callable[[], bool], detail: str) -> None:
        try:
            ok = fn()
        except CurvatureToolkitError as e:
            self.record(name, False, f"{detail}: {e}")
            return
        self.record(name, ok, detail)


def _oracle_checks(tally: _Tally, g: Graph, rng: np.random.Generator, label: str) -> None:
    x, y = (int(v) for v in rng.choice(g.vertex_count, size=2, replace=False))
    p = ORACLE_IDLENESS[int(rng.integers(len(ORACLE_IDLENESS)))]
    mu, nu = lazy_measure(g, x, p), lazy_measure(g, y, p)
    detail = f"{label} pair ({x}, {y}) p={p}"
    cert = w1(g, mu, nu, anchor=y)
    tally.check("w1 equals enumeration oracle", lambda: cert.value == oracle_w1_enum(g, mu, nu, anchor=y), detail)
    tally.check("certificate witnesses duality", lambda: check_certificate(g, cert).ok, detail)

    def integer_potential() -> bool:
        phi = integerize_potential(g, cert)
        return phi.is_integer() and not lipschitz_violations(g, phi, metric=True) and phi.objective(mu, nu) == cert.value

    tally.check("integerized potential is optimal", integer_potential, detail)


def _pair_checks(tally: _Tally, g: Graph, x: int, y: int, rng: np.random.Generator, label: str) -> None:
    detail = f"{label} pair ({x}, {y})"
    try:
        profile = idleness_profile(g, x, y)
    except CurvatureToolkitError as e:
        tally.record("profile structure", False, f"{detail}: {e}")
        return
    tally.record("profile structure", True)

    report = check_critical_bounds(profile)
    tally.record("critical point bounds", report.passed, f"{detail}: {[c.name for c in report.failures()]}")
    function = profile_function(profile)
    tally.record("at most three pieces", len(function.pieces()) <= 3, detail)
    tally.record("concave", function.is_concave(), detail)
    tally.record("breakpoints are critical points", list(function.breakpoints[1:-1]) == critical_points(profile), detail)

    delta = profile.delta
    for p in GAP_IDLENESS:
        tally.check("potential gap at large idleness", lambda: optimal_potential_gap(g, x, y, p) == delta, f"{detail} p={p}")
    low = Fraction(int(rng.integers(1, 11)), 20)
    tally.check("potential gap within range", lambda: delta - 2 <= optimal_potential_gap(g, x, y, low) <= delta, f"{detail} p={low}")

    grid = Fraction(int(rng.integers(0, 21)), 20)
    tally.check("profile matches direct kappa_p", lambda: evaluate_profile(profile, grid) == kappa_p(g, x, y, grid), f"{detail} p={grid}")


def run_bounds(verify: VerifyConfig, seed: int) -> SuiteResult:
    result = SuiteResult(SuiteName.BOUNDS.value)
    rng = np.random.default_rng(seed)
    tally = _Tally()
    half = Fraction(1, 2)

    for i in tqdm(range(verify.graph_count), desc="random graphs"):
        n = int(rng.integers(3, verify.max_vertices + 1))
        g = gen_random_connected(n, float(rng.uniform(0.1, 0.6)), rng)
        label = f"graph {i} (n={n}, edges={g.edges()})"
        if i < verify.oracle_count:
            _oracle_checks(tally, g, rng, label)
        for x in range(n):
            for y in range(x + 1, n):
                if g.distance(x, y) >= 2:
                    _pair_checks(tally, g, x, y, rng, label)

        witness = positive_pair_witness(g, half)
        tally.record("positive curvature somewhere", witness is not None, label)
        report = bonnet_myers_check(g, 0, half)
        tally.record("radius bound", report.holds, f"{label}: {report}")

    for name, (passed, total) in tally.counts.items():
        result.tally(name, passed, total)
    return result


def run_figure3(verify: VerifyConfig, seed: int) -> SuiteResult:
    result = SuiteResult(SuiteName.FIGURE3.value)
    pair = gen_figure3_graph()
    g = pair.graph
    assert g.labels is not None
    index = {label: v for v, label in enumerate(g.labels)}
    for (a, b), expected in FIGURE3_LLY.items():
        result.expect_equal(f"lly({a}, {b})", expected, kappa_lly(g, index[a], index[b]))

    report = bonnet_myers_check(g, index["x"], Fraction(1, 2))
    result.expect_equal("min kappa_1/2 from x", Fraction(1, 6), report.min_kappa)
    result.expect_equal("radius bound at x", Fraction(6), report.radius_bound)
    result.expect_true("eccentricity within radius bound", report.holds, f"{report.eccentricity} <= {report.radius_bound}")
    return result


SUITES: dict[SuiteName, Callable[[VerifyConfig, int], SuiteResult]] = {
    SuiteName.FAMILY: run_family,
    SuiteName.HEXAGON: run_hexagon,
    SuiteName.TREE: run_tree,
    SuiteName.PRODUCT: run_product,
    SuiteName.BOUNDS: run_bounds,
    SuiteName.FIGURE3: run_figure3,
}


def run_suite(verify: VerifyConfig, seed: int = 0) -> SuiteResult:
    """Runs the configured suite. A structural failure raised mid-suite becomes a failed check."""
    logger.info("Running verification suite '%s'", verify.suite.value)
    try:
        result = SUITES[verify.suite](verify, seed)
    except CurvatureToolkitError as e:
        logger.error("suite '%s' stopped: %s", verify.suite.value, e)
        result = SuiteResult(verify.suite.value)
        result.checks.append(CheckResult("suite completed", "true", f"{type(e).__name__}: {e}", False))
        return result
    logger.info("Suite '%s': %d/%d checks passed", result.suite, len(result.checks) - len(result.failures()), len(result.checks))
    return result
