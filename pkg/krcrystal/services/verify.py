"""Exhaustive verifiers: perfectness of B^{r,s} and the defining properties of its affine structure."""

from __future__ import annotations

import logging
import time
from collections import Counter, deque
from dataclasses import dataclass

from krcrystal.config import settings
from krcrystal.errors import BudgetExceeded, KRError
from krcrystal.schemas import ConditionResult, VerificationReport
from krcrystal.services.cartan import (
    AffineWeight,
    Family,
    Shape,
    dominant_weights,
    h_pairing,
    level,
    root_coordinates,
    sw_r,
)
from krcrystal.services.classical import Element
from krcrystal.services.kr import KRCrystal

logger = logging.getLogger("krcrystal.verify")


@dataclass
class CrystalTables:
    """Index-based f_i, e_i, eps_i, phi_i for every element and node 0..n (-1 = undefined)."""

    elements: list[Element]
    index: dict[Element, int]
    f: dict[int, list[int]]
    e: dict[int, list[int]]
    eps: dict[int, list[int]]
    phi: dict[int, list[int]]

    @classmethod
    def build(cls, crystal: KRCrystal) -> CrystalTables:
        elements = crystal.elements()
        index = {b: k for k, b in enumerate(elements)}
        f: dict[int, list[int]] = {}
        e: dict[int, list[int]] = {}
        eps: dict[int, list[int]] = {}
        phi: dict[int, list[int]] = {}
        for i in crystal.cartan.nodes:
            f[i], e[i], eps[i], phi[i] = [], [], [], []
            for b in elements:
                f[i].append(_lookup(index, crystal.f(i, b)))
                e[i].append(_lookup(index, crystal.e(i, b)))
                ep, ph = crystal.eps_phi(i, b)
                eps[i].append(ep)
                phi[i].append(ph)
        return cls(elements, index, f, e, eps, phi)

    def eps_vec(self, k: int) -> AffineWeight:
        return AffineWeight(tuple(self.eps[i][k] for i in sorted(self.eps)))

    def phi_vec(self, k: int) -> AffineWeight:
        return AffineWeight(tuple(self.phi[i][k] for i in sorted(self.phi)))


def _lookup(index: dict[Element, int], b: Element | None) -> int:
    if b is None:
        return -1
    try:
        return index[b]
    except KeyError as exc:
        raise KRError(f"operator left the crystal at {b}") from exc


def _witness(b: Element) -> list[list[int]]:
    return b.rows()


def _result(name: str, failures: list, detail: str | None = None) -> ConditionResult:
    if failures:
        return ConditionResult(
            condition=name,
            status="fail",
            detail=detail or f"{len(failures)} counterexample(s)",
            witness=failures[0],
        )
    return ConditionResult(condition=name, status="pass", detail=detail)


def _report(crystal: KRCrystal, kind: str, conditions: list[ConditionResult], start: float) -> VerificationReport:
    passed = all(c.status != "fail" for c in conditions)
    logger.info(
        "crystal_verified",
        extra={
            "extra": {
                "crystal": crystal.label,
                "kind": kind,
                "passed": passed,
                "failed": [c.condition for c in conditions if c.status == "fail"],
                "duration_ms": round((time.time() - start) * 1000, 1),
            }
        },
    )
    return VerificationReport(
        crystal=crystal.label, kind=kind, passed=passed, level=crystal.s, conditions=conditions
    )


# ── Perfectness ────────────────────────────────────────────────────────


def tensor_square_connected(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    """BFS over B (x) B with the two-factor signature rule."""
    N = len(tables.elements)
    if N * N > settings.TENSOR_BUDGET:
        raise BudgetExceeded(
            f"B (x) B has {N * N} vertices, above KR_TENSOR_BUDGET={settings.TENSOR_BUDGET}",
            detail={"size": N * N},
        )
    nodes = list(crystal.cartan.nodes)
    seen = bytearray(N * N)
    seen[0] = 1
    queue = deque([0])
    reached = 1
    while queue:
        code = queue.popleft()
        left, right = divmod(code, N)
        for i in nodes:
            eps, phi = tables.eps[i], tables.phi[i]
            if eps[left] >= phi[right]:
                lowered = (tables.f[i][left], right)
            else:
                lowered = (left, tables.f[i][right])
            if eps[left] > phi[right]:
                raised = (tables.e[i][left], right)
            else:
                raised = (left, tables.e[i][right])
            for a, b in (lowered, raised):
                if a < 0 or b < 0:
                    continue
                nxt = a * N + b
                if not seen[nxt]:
                    seen[nxt] = 1
                    reached += 1
                    queue.append(nxt)
    if reached == N * N:
        return ConditionResult(condition="tensor_square_connected", status="pass", detail=f"{N * N} vertices")
    missing = seen.index(0)
    a, b = divmod(missing, N)
    return ConditionResult(
        condition="tensor_square_connected",
        status="fail",
        detail=f"reached {reached} of {N * N} vertices",
        witness=[_witness(tables.elements[a]), _witness(tables.elements[b])],
    )


def weight_bound(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    """Every weight lies below s*omega_r, which is attained exactly once."""
    top = sw_r(crystal.r, crystal.s, crystal.cartan)
    failures = []
    attained = 0
    for b in tables.elements:
        wt = crystal.weight(b)
        if wt == top:
            attained += 1
        coords = root_coordinates(top - wt, crystal.cartan)
        if any(c < 0 or c.denominator != 1 for c in coords):
            failures.append(_witness(b))
    if attained != 1:
        return ConditionResult(
            condition="weight_bound",
            status="fail",
            detail=f"weight s*omega_r attained {attained} times",
        )
    return _result("weight_bound", failures)


def minimal_level(crystal: KRCrystal, tables: CrystalTables) -> tuple[ConditionResult, list[int]]:
    levels = [level(tables.eps_vec(k), crystal.cartan) for k in range(len(tables.elements))]
    lowest = min(levels)
    b_min = [k for k, lev in enumerate(levels) if lev == lowest]
    if lowest < crystal.s:
        return (
            ConditionResult(
                condition="minimal_level",
                status="fail",
                detail=f"minimal level {lowest} < {crystal.s}",
                witness=_witness(tables.elements[b_min[0]]),
            ),
            b_min,
        )
    return ConditionResult(condition="minimal_level", status="pass", detail=f"minimal level {lowest}"), b_min


def minimal_bijections(crystal: KRCrystal, tables: CrystalTables, b_min: list[int]) -> ConditionResult:
    weights = set(dominant_weights(crystal.s, crystal.cartan))
    problems = []
    for name, vec in (("epsilon", tables.eps_vec), ("phi", tables.phi_vec)):
        values = [vec(k) for k in b_min]
        counts = Counter(values)
        repeated = [w for w, m in counts.items() if m > 1]
        if repeated:
            problems.append({"map": name, "repeated": list(repeated[0].coords)})
        if set(values) != weights:
            missing = sorted(weights - set(values))
            problems.append({"map": name, "missing": [list(w.coords) for w in missing[:3]]})
    detail = f"|B_min|={len(b_min)}, level-{crystal.s} weights={len(weights)}"
    return _result("minimal_bijections", problems, detail)


def check_perfect(crystal: KRCrystal) -> VerificationReport:
    start = time.time()
    tables = CrystalTables.build(crystal)
    level_result, b_min = minimal_level(crystal, tables)
    conditions = [
        tensor_square_connected(crystal, tables),
        weight_bound(crystal, tables),
        ConditionResult(
            condition="module_existence",
            status="skipped",
            detail="existence of a finite-dimensional module with a crystal pseudobase is not machine-checkable",
        ),
        level_result,
    ]
    if level_result.status == "pass" and level(tables.eps_vec(b_min[0]), crystal.cartan) == crystal.s:
        conditions.append(minimal_bijections(crystal, tables, b_min))
    else:
        conditions.append(
            ConditionResult(condition="minimal_bijections", status="fail", detail="minimal level differs from s")
        )
    return _report(crystal, "perfect", conditions, start)


# ── Affine structure ───────────────────────────────────────────────────


def _same(a: Element | None, b: Element | None) -> bool:
    return a == b


def classical_decomposition(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    nodes = list(crystal.cartan.classical_nodes)
    highest = [
        b for k, b in enumerate(tables.elements) if all(tables.eps[i][k] == 0 for i in nodes)
    ]
    found = Counter(b.shape for b in highest)
    expected = Counter(crystal.shapes)
    failures = [_witness(b) for b in highest if crystal.weight(b).coords != _shape_weight(b.shape, crystal)]
    if found != expected:
        return ConditionResult(
            condition="classical_decomposition",
            status="fail",
            detail="highest weight elements do not match the domino-removal shapes",
            witness=[list(s.columns) for s in (found - expected) + (expected - found)],
        )
    return _result("classical_decomposition", failures)


def _shape_weight(shape: Shape, crystal: KRCrystal) -> tuple[int, ...]:
    rows = list(shape.rows)
    return tuple(rows + [0] * (crystal.cartan.n - len(rows)))


def sigma_involution(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    failures = [_witness(b) for b in tables.elements if crystal.sigma(crystal.sigma(b)) != b]
    return _result("sigma_involution", failures)


def sigma_equivariance(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    failures = []
    for b in tables.elements:
        sb = crystal.sigma(b)
        for i in range(2, crystal.cartan.n + 1):
            for op in (crystal.e, crystal.f):
                c = op(i, b)
                if not _same(None if c is None else crystal.sigma(c), op(i, sb)):
                    failures.append({"node": i, "op": op.__name__, "rows": _witness(b)})
    return _result("sigma_equivariance", failures)


def zero_one_commutation(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    failures = []
    for b in tables.elements:
        for op in (crystal.e, crystal.f):
            first = op(1, b)
            second = op(0, b)
            left = None if first is None else op(0, first)
            right = None if second is None else op(1, second)
            if left != right:
                failures.append({"op": op.__name__, "rows": _witness(b)})
    return _result("zero_one_commutation", failures)


def string_lengths(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    failures = []
    for k, b in enumerate(tables.elements):
        wt = crystal.weight(b)
        for i in crystal.cartan.nodes:
            if h_pairing(i, wt, crystal.cartan) != tables.phi[i][k] - tables.eps[i][k]:
                failures.append({"node": i, "rows": _witness(b)})
    return _result("string_lengths", failures)


def ground_state(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    n, s = crystal.cartan.n, crystal.s
    want_eps = AffineWeight.fundamental(n, 0, s)
    want_phi = AffineWeight.fundamental(n, 0 if crystal.r % 2 == 0 else 1, s)
    hits = [k for k in range(len(tables.elements)) if tables.eps_vec(k) == want_eps]
    u = crystal.ground_state()
    if len(hits) != 1:
        return ConditionResult(
            condition="ground_state",
            status="fail",
            detail=f"{len(hits)} elements with epsilon = s*Lambda_0",
            witness=[_witness(tables.elements[k]) for k in hits[:3]],
        )
    k = hits[0]
    if tables.elements[k] != u or tables.phi_vec(k) != want_phi:
        return ConditionResult(
            condition="ground_state",
            status="fail",
            detail=f"u has phi {tables.phi_vec(k).coords}",
            witness=_witness(tables.elements[k]),
        )
    return ConditionResult(condition="ground_state", status="pass", witness=_witness(u))


def sigma_swaps_weights(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    failures = []
    for k, b in enumerate(tables.elements):
        j = tables.index[crystal.sigma(b)]
        if tables.eps_vec(j) != tables.eps_vec(k).swap(0, 1) or tables.phi_vec(j) != tables.phi_vec(k).swap(0, 1):
            failures.append(_witness(b))
    return _result("sigma_swaps_weights", failures)


def minimal_phi_relation(crystal: KRCrystal, tables: CrystalTables) -> ConditionResult:
    """phi = eps on B_min for r even; phi = sigma sigma' eps for r odd."""
    n = crystal.cartan.n
    _, b_min = minimal_level(crystal, tables)
    failures = []
    for k in b_min:
        expected = tables.eps_vec(k)
        if crystal.r % 2:
            expected = expected.swap(0, 1)
            if crystal.cartan.family is Family.D:
                expected = expected.swap(n - 1, n)
        if tables.phi_vec(k) != expected:
            failures.append(_witness(tables.elements[k]))
    if failures and crystal.r % 2 and crystal.cartan.family is not Family.D:
        return ConditionResult(
            condition="minimal_phi_relation",
            status="info",
            detail=f"{len(failures)} minimal element(s) differ from sigma(eps) without a second automorphism",
            witness=failures[0],
        )
    return _result("minimal_phi_relation", failures)


def check_property_akr(crystal: KRCrystal) -> VerificationReport:
    start = time.time()
    tables = CrystalTables.build(crystal)
    conditions = [
        classical_decomposition(crystal, tables),
        sigma_involution(crystal, tables),
        sigma_equivariance(crystal, tables),
        zero_one_commutation(crystal, tables),
        string_lengths(crystal, tables),
        ground_state(crystal, tables),
        sigma_swaps_weights(crystal, tables),
        minimal_phi_relation(crystal, tables),
    ]
    return _report(crystal, "properties", conditions, start)
