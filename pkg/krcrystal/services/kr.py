"""
Kirillov-Reshetikhin crystals B^{r,s} of types D_n^(1), B_n^(1), A_{2n-1}^(2).

Classically B^{r,s} is the direct sum of B(shape) over the shapes obtained from
the r x s rectangle by removing vertical dominoes. The 0-arrows come from the
involution sigma, which realises the Dynkin automorphism exchanging 0 and 1:
f_0 = sigma f_1 sigma and e_0 = sigma e_1 sigma.
"""

from __future__ import annotations

import logging
import threading
import time
from typing import Iterator, Sequence

import networkx as nx

from krcrystal.config import settings
from krcrystal.errors import (
    BudgetExceeded,
    InvalidElement,
    InvalidLetter,
    KRError,
    MinimalElementError,
    WeightError,
)
from krcrystal.services.cartan import (
    AffineWeight,
    CartanType,
    ClassicalWeight,
    Family,
    Shape,
    classical_shapes,
    level,
)
from krcrystal.services.classical import (
    CrystalGraph,
    Element,
    generate_component,
    highest_word,
    is_member,
    raise_word,
)
from krcrystal.services.diagrams import Column, PMDiagram, phi, phi_inverse, s_involution
from krcrystal.services.letters import Direction
from krcrystal.services.tensor import word_crystal

logger = logging.getLogger("krcrystal.kr")


class KRCrystal:
    def __init__(self, cartan: CartanType, r: int, s: int, *, budget: int | None = None) -> None:
        self.cartan = cartan
        self.r = r
        self.s = s
        self.shapes: list[Shape] = classical_shapes(r, s, cartan)
        self._shape_set = frozenset(self.shapes)
        self.budget = settings.VERTEX_BUDGET if budget is None else budget
        self.words = word_crystal(cartan)
        self._components: dict[Shape, CrystalGraph] | None = None
        self._sigma: dict[Element, Element] = {}
        self._lock = threading.Lock()
        self._weight_strings: dict[int, tuple[int, ...]] = {}

    @property
    def label(self) -> str:
        return f"B^{{{self.r},{self.s}}} of type {self.cartan}"

    def __repr__(self) -> str:
        return f"KRCrystal({self.label})"

    # ── Classical structure ────────────────────────────────────────────

    def components(self) -> dict[Shape, CrystalGraph]:
        if self._components is None:
            start = time.time()
            built: dict[Shape, CrystalGraph] = {}
            total = 0
            for shape in self.shapes:
                graph = generate_component(shape, self.cartan, self.budget)
                total += len(graph)
                if total > self.budget:
                    raise BudgetExceeded(
                        f"{self.label} exceeds {self.budget} vertices",
                        detail={"budget": self.budget},
                    )
                built[shape] = graph
            self._components = built
            logger.info(
                "kr_crystal_built",
                extra={
                    "extra": {
                        "crystal": self.label,
                        "components": len(built),
                        "vertices": total,
                        "duration_ms": round((time.time() - start) * 1000, 1),
                    }
                },
            )
        return self._components

    def elements(self) -> list[Element]:
        return [b for graph in self.components().values() for b in graph]

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements())

    def __len__(self) -> int:
        return sum(len(g) for g in self.components().values())

    def highest_element(self, shape: Shape) -> Element:
        if shape not in self._shape_set:
            raise InvalidElement(f"{shape} is not a classical component of {self.label}")
        return highest_word(shape, self.cartan)

    def element(self, rows: Sequence[Sequence[int]]) -> Element:
        """Decode a row list and check membership without enumerating the crystal."""
        b = Element.from_rows(rows, width=self.s)
        return self.check(b)

    def check(self, b: Element) -> Element:
        if b.shape not in self._shape_set:
            raise InvalidElement(
                f"shape {b.shape} is not a classical component of {self.label}",
                detail={"rows": b.rows()},
            )
        try:
            self.words.check(b.word)
        except InvalidLetter as exc:
            raise InvalidElement(str(exc), detail={"rows": b.rows()}) from exc
        if not is_member(b, self.cartan):
            raise InvalidElement(
                f"{b} is an unverified filling: it does not lie in B({b.shape.nonzero()})",
                detail={"rows": b.rows()},
            )
        return b

    def weight(self, b: Element) -> ClassicalWeight:
        return self.words.weight(b.word)

    # ── sigma and the affine operators ─────────────────────────────────

    def sigma(self, b: Element) -> Element:
        cached = self._sigma.get(b)
        if cached is not None:
            return cached
        n = self.cartan.n
        top, string = raise_word(self.words, b.word, range(2, n + 1))
        P = phi_inverse(b.with_word(top), self.cartan)
        Q = s_involution(P, self.r, self.s)
        image = phi(Q, self.cartan)
        word = self.words.apply(image.word, reversed(string), Direction.LOWER)
        if word is None:
            raise KRError(f"sigma: lowering string {string} undefined on the image of {b}")
        result = Element(Q.outer, word)
        if settings.SIGMA_MEMO:
            with self._lock:
                self._sigma[b] = result
        return result

    def step(self, i: int, b: Element, direction: Direction) -> Element | None:
        if i == 0:
            return self.affine_step(b, direction)
        if i not in self.cartan.classical_nodes:
            raise WeightError(f"node {i} out of range for {self.cartan}")
        word = self.words.step(i, b.word, direction)
        return None if word is None else b.with_word(word)

    def affine_step(self, b: Element, direction: Direction) -> Element | None:
        c = self.step(1, self.sigma(b), direction)
        return None if c is None else self.sigma(c)

    def e(self, i: int, b: Element) -> Element | None:
        return self.step(i, b, Direction.RAISE)

    def f(self, i: int, b: Element) -> Element | None:
        return self.step(i, b, Direction.LOWER)

    def eps_phi(self, i: int, b: Element) -> tuple[int, int]:
        if i == 0:
            # e_0^k = sigma e_1^k sigma
            return self.words.eps_phi(1, self.sigma(b).word)
        return self.words.eps_phi(i, b.word)

    def eps_phi_vec(self, b: Element) -> tuple[AffineWeight, AffineWeight]:
        pairs = [self.eps_phi(i, b) for i in self.cartan.nodes]
        return AffineWeight(tuple(p[0] for p in pairs)), AffineWeight(tuple(p[1] for p in pairs))

    def crystal_graph(self, affine: bool = True) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        elements = self.elements()
        g.add_nodes_from(elements)
        nodes = self.cartan.nodes if affine else self.cartan.classical_nodes
        for b in elements:
            for i in nodes:
                c = self.f(i, b)
                if c is not None:
                    g.add_edge(b, c, key=i, label=i)
        return g

    # ── Minimal elements ───────────────────────────────────────────────

    def _weight_piece(self, k: int) -> list[Column]:
        r, n, fam = self.r, self.cartan.n, self.cartan.family
        even = r % 2 == 0
        if k == 0:
            return [(0, 0, 0)] if even else [(1, 1, 0)]
        if k == 1:
            return [(2, 1, 0)] if even else [(1, 0, 0)]
        if k <= r:
            if (r - k) % 2:
                return [(k + 1, k, k - 1), (k - 1, k - 1, k - 1)]
            return [(k, k, k - 1), (k, k - 1, k - 1)]
        if (fam is Family.D and k >= n - 1) or (fam is Family.B and k == n):
            return [(r, r, r)]
        return [(r, r, r), (r, r, r)]

    def weight_diagram(self, weight: AffineWeight) -> PMDiagram:
        lev = level(weight, self.cartan)
        if lev != self.s:
            raise WeightError(f"weight {weight} has level {lev}, expected {self.s}")
        cols: list[Column] = []
        for k, mult in enumerate(weight.coords):
            cols.extend(self._weight_piece(k) * mult)
        return PMDiagram.from_columns(cols)

    def _weight_tableau(self, k: int) -> Element | None:
        r, n, fam = self.r, self.cartan.n, self.cartan.family
        if k == 0:
            return None if r % 2 == 0 else Element.from_columns([(1,)])
        if k == 1:
            return Element.from_columns([(2, -2)]) if r % 2 == 0 else Element.from_columns([(-1,)])
        if k <= r:
            if (r - k) % 2:
                left = tuple(range(2, k + 2)) + (-(k + 1),)
                return Element.from_columns([left, tuple(range(-k, -1))])
            return Element.from_columns([tuple(range(1, k + 1)), tuple(range(-k, 0))])
        if fam is Family.D and k >= n - 1:
            first = n if k == n - 1 else -n
            return Element.from_columns([tuple(first if j % 2 == 0 else -first for j in range(r))])
        if fam is Family.B and k == n:
            return Element.from_columns([(0,) * r])
        return Element.from_columns([tuple(range(k - r + 1, k + 1)), tuple(range(-k, -k + r))])

    def weight_string(self, k: int) -> tuple[int, ...]:
        """Lowering indices, in application order, taking Phi(diagram(Lambda_k)) to T(Lambda_k)."""
        if k in self._weight_strings:
            return self._weight_strings[k]
        tableau = self._weight_tableau(k)
        if tableau is None:
            string: tuple[int, ...] = ()
        else:
            top, raised = raise_word(self.words, tableau.word, range(2, self.cartan.n + 1))
            expected = phi(PMDiagram.from_columns(self._weight_piece(k)), self.cartan)
            if top != expected.word:
                raise MinimalElementError(
                    f"T(Lambda_{k}) does not raise to Phi(diagram(Lambda_{k}))",
                    detail={"reached": list(top), "expected": list(expected.word)},
                )
            string = tuple(reversed(raised))
        self._weight_strings[k] = string
        return string

    def minimal_element(self, weight: AffineWeight) -> Element:
        diagram = self.weight_diagram(weight)
        b = phi(diagram, self.cartan)
        word = b.word
        for k in range(2, self.cartan.n + 1):
            string = self.weight_string(k)
            for _ in range(weight.coords[k]):
                lowered = self.words.apply(word, string, Direction.LOWER)
                if lowered is None:
                    raise MinimalElementError(f"f(Lambda_{k}) is undefined while building {weight}")
                word = lowered
        result = b.with_word(word)
        eps, _ = self.eps_phi_vec(result)
        if eps != weight:
            raise MinimalElementError(
                f"constructed element has epsilon {eps.coords}, expected {weight.coords}",
                detail={"rows": result.rows()},
            )
        return result

    def minimal_set(self) -> dict[AffineWeight, list[Element]]:
        """All elements of minimal level, grouped by epsilon."""
        found: dict[AffineWeight, list[Element]] = {}
        best: int | None = None
        for b in self.elements():
            eps, _ = self.eps_phi_vec(b)
            lev = level(eps, self.cartan)
            if best is None or lev < best:
                best = lev
                found = {}
            if lev == best:
                found.setdefault(eps, []).append(b)
        return dict(sorted(found.items()))

    def ground_state(self) -> Element:
        """u: the empty element for r even, the highest element of B(s omega_1) for r odd."""
        cols = (0,) * self.s if self.r % 2 == 0 else (1,) * self.s
        return highest_word(Shape(cols), self.cartan)


def build_kr(r: int, s: int, cartan: CartanType, budget: int | None = None) -> KRCrystal:
    """Build B^{r,s} and generate every classical component up front."""
    crystal = KRCrystal(cartan, r, s, budget=budget)
    crystal.components()
    return crystal
