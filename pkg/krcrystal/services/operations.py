"""Request-level operations shared by the command line and the HTTP routers."""

from __future__ import annotations

import logging
from typing import Sequence

from krcrystal.errors import InvalidDiagram
from krcrystal.schemas import (
    ComponentSummary,
    CrystalSummary,
    EpsPhiResponse,
    MinimalEntry,
    PairResponse,
    VerificationReport,
)
from krcrystal.services.cartan import AffineWeight, level
from krcrystal.services.diagrams import (
    PMDiagram,
    PMPair,
    diagrams_string,
    e1_pair,
    pair_of,
    phi,
    psi,
    s_involution,
)
from krcrystal.services.kr import KRCrystal
from krcrystal.services.letters import Direction
from krcrystal.services.verify import check_perfect, check_property_akr
from krcrystal.utils.codec import vertex_name
from krcrystal.utils.dot import export_dot

logger = logging.getLogger("krcrystal.operations")

Rows = list[list[int]]
DiagramRows = list[list[str]]


def summary(crystal: KRCrystal) -> CrystalSummary:
    components = crystal.components()
    return CrystalSummary(
        crystal=crystal.label,
        cartan=crystal.cartan.triple(),
        r=crystal.r,
        s=crystal.s,
        size=sum(len(g) for g in components.values()),
        components=[
            ComponentSummary(shape=list(shape.columns), size=len(graph))
            for shape, graph in components.items()
        ],
    )


def step(crystal: KRCrystal, rows: Sequence[Sequence[int]], i: int, direction: Direction) -> Rows | None:
    b = crystal.element(rows)
    c = crystal.step(i, b, direction)
    logger.debug(
        "crystal_step",
        extra={"extra": {"crystal": crystal.label, "i": i, "direction": direction.value, "defined": c is not None}},
    )
    return None if c is None else c.rows()


def sigma(crystal: KRCrystal, rows: Sequence[Sequence[int]]) -> Rows:
    return crystal.sigma(crystal.element(rows)).rows()


def eps_phi(crystal: KRCrystal, rows: Sequence[Sequence[int]]) -> EpsPhiResponse:
    eps, ph = crystal.eps_phi_vec(crystal.element(rows))
    return EpsPhiResponse(epsilon=list(eps.coords), phi=list(ph.coords), level=level(eps, crystal.cartan))


def minimal(crystal: KRCrystal, weight: Sequence[int]) -> Rows:
    return crystal.minimal_element(AffineWeight(tuple(weight))).rows()


def minimal_list(crystal: KRCrystal) -> list[MinimalEntry]:
    entries = []
    for eps, elements in crystal.minimal_set().items():
        for b in elements:
            _, ph = crystal.eps_phi_vec(b)
            entries.append(MinimalEntry(epsilon=list(eps.coords), phi=list(ph.coords), rows=b.rows()))
    return entries


def verify(crystal: KRCrystal, kind: str) -> VerificationReport:
    if kind == "perfect":
        return check_perfect(crystal)
    return check_property_akr(crystal)


def graph_dot(crystal: KRCrystal, affine: bool = True) -> str:
    return export_dot(crystal.crystal_graph(affine=affine), vertex_name)


def weight_diagram(crystal: KRCrystal, weight: Sequence[int]) -> DiagramRows:
    return crystal.weight_diagram(AffineWeight(tuple(weight))).rows()


# ── Diagrams ───────────────────────────────────────────────────────────


def _diagram(crystal: KRCrystal, rows: Sequence[Sequence[str]]) -> PMDiagram:
    P = PMDiagram.from_rows(rows, width=crystal.s)
    if P.outer not in crystal.shapes:
        raise InvalidDiagram(f"outer shape {P.outer} is not a classical component of {crystal.label}")
    return P


def _pair(crystal: KRCrystal, big: Sequence[Sequence[str]], small: Sequence[Sequence[str]]) -> PMPair:
    return PMPair(_diagram(crystal, big), PMDiagram.from_rows(small, width=crystal.s))


def diagram_phi(crystal: KRCrystal, rows: Sequence[Sequence[str]]) -> Rows:
    return phi(_diagram(crystal, rows), crystal.cartan).rows()


def diagram_string(crystal: KRCrystal, rows: Sequence[Sequence[str]]) -> list[int]:
    return list(diagrams_string(_diagram(crystal, rows), crystal.cartan))


def diagram_s_involution(crystal: KRCrystal, rows: Sequence[Sequence[str]]) -> DiagramRows:
    return s_involution(_diagram(crystal, rows), crystal.r, crystal.s).rows()


def pair_psi(crystal: KRCrystal, big: Sequence[Sequence[str]], small: Sequence[Sequence[str]]) -> Rows:
    return psi(_pair(crystal, big, small), crystal.cartan).rows()


def element_pair(crystal: KRCrystal, rows: Sequence[Sequence[int]]) -> PairResponse:
    pair = pair_of(crystal.element(rows), crystal.cartan)
    return PairResponse(P=pair.P.rows(), p=pair.p.rows())


def pair_e1(crystal: KRCrystal, big: Sequence[Sequence[str]], small: Sequence[Sequence[str]]) -> PairResponse | None:
    raised = e1_pair(_pair(crystal, big, small))
    return None if raised is None else PairResponse(P=raised.P.rows(), p=raised.p.rows())
