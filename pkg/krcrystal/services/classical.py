"""
Classical components B(lambda) as connected components of tensor powers of B(omega_1).

An element is a word together with a shape. Columns are laid out left to
right from tallest to shortest; each column contributes its letters top cell
first, so the highest element of a column of height h is h (x) ... (x) 1.
"""

from __future__ import annotations

import logging
import time
from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import networkx as nx

from krcrystal.config import settings
from krcrystal.errors import BudgetExceeded, InvalidElement, WeightError
from krcrystal.services.cartan import CartanType, Shape
from krcrystal.services.tensor import Word, WordCrystal, word_crystal

logger = logging.getLogger("krcrystal.classical")


@dataclass(frozen=True)
class Element:
    shape: Shape
    word: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if len(self.word) != self.shape.size:
            raise InvalidElement(
                f"word of length {len(self.word)} does not fill shape {self.shape}"
            )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], width: int | None = None) -> Element:
        """Build from columns given bottom-to-top, tallest first."""
        heights = [len(c) for c in columns]
        shape = Shape(tuple(heights))
        if width is not None:
            shape = shape.padded(width)
        word: list[int] = []
        for col in columns:
            word.extend(reversed(col))
        return cls(shape, tuple(word))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], width: int | None = None) -> Element:
        """Build from rows listed top-to-bottom (French notation, bottom row longest)."""
        lengths = [len(row) for row in rows]
        if any(a > b for a, b in zip(lengths, lengths[1:])):
            raise InvalidElement(f"row lengths must weakly increase downwards, got {lengths}")
        if lengths and lengths[0] == 0:
            raise InvalidElement("empty row in element")
        columns: list[list[int]] = []
        bottom = len(rows) - 1
        for j in range(lengths[-1] if lengths else 0):
            col = []
            for t in range(bottom, -1, -1):
                if len(rows[t]) <= j:
                    break
                col.append(rows[t][j])
            columns.append(col)
        try:
            return cls.from_columns(columns, width)
        except WeightError as exc:
            raise InvalidElement(str(exc)) from exc

    def columns(self) -> list[tuple[int, ...]]:
        cols: list[tuple[int, ...]] = []
        pos = 0
        for h in self.shape.columns:
            cols.append(tuple(reversed(self.word[pos:pos + h])))
            pos += h
        return cols

    def rows(self) -> list[list[int]]:
        cols = self.columns()
        return [
            [col[r - 1] for col in cols if len(col) >= r]
            for r in range(self.shape.height, 0, -1)
        ]

    def with_word(self, word: Word) -> Element:
        return Element(self.shape, word)

    def __str__(self) -> str:
        return str(self.rows()).replace(" ", "")


class CrystalGraph:
    """Vertices in discovery order; edge (b, b') with key i whenever f_i(b) = b'."""

    def __init__(self, cartan: CartanType, graph: nx.MultiDiGraph) -> None:
        self.cartan = cartan
        self.graph = graph

    @property
    def vertices(self) -> list[Element]:
        return list(self.graph.nodes)

    def edges(self) -> list[tuple[Element, int, Element]]:
        return [(u, k, v) for u, v, k in self.graph.edges(keys=True)]

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def __iter__(self) -> Iterator[Element]:
        return iter(self.graph.nodes)

    def __contains__(self, b: object) -> bool:
        return b in self.graph

    def is_connected(self) -> bool:
        return len(self) <= 1 or nx.is_weakly_connected(self.graph)


def highest_word(shape: Shape, t: CartanType) -> Element:
    if shape.height > t.max_height:
        raise WeightError(f"shape {shape} has a column taller than {t.max_height} for {t}")
    return Element.from_columns([tuple(range(1, h + 1)) for h in shape.columns])


def _budget(budget: int | None) -> int:
    return settings.VERTEX_BUDGET if budget is None else budget


@lru_cache(maxsize=128)
def _component(shape: Shape, t: CartanType, budget: int) -> CrystalGraph:
    wc = word_crystal(t)
    start = time.time()
    top = highest_word(shape, t)
    g = nx.MultiDiGraph()
    g.add_node(top)
    queue = deque([top])
    while queue:
        b = queue.popleft()
        for i in t.classical_nodes:
            w = wc.f(i, b.word)
            if w is None:
                continue
            c = Element(shape, w)
            if c not in g:
                if g.number_of_nodes() >= budget:
                    raise BudgetExceeded(
                        f"component {shape} of {t} exceeds {budget} vertices",
                        detail={"shape": list(shape.columns), "budget": budget},
                    )
                g.add_node(c)
                queue.append(c)
            g.add_edge(b, c, key=i, label=i)
    logger.info(
        "component_generated",
        extra={
            "extra": {
                "cartan": str(t),
                "shape": list(shape.columns),
                "vertices": g.number_of_nodes(),
                "duration_ms": round((time.time() - start) * 1000, 1),
            }
        },
    )
    return CrystalGraph(t, g)


def generate_component(shape: Shape, t: CartanType, budget: int | None = None) -> CrystalGraph:
    """BFS closure of highest_word(shape) under f_1..f_n."""
    return _component(shape, t, _budget(budget))


def raise_word(wc: WordCrystal, word: Word, nodes: Iterable[int]) -> tuple[Word, tuple[int, ...]]:
    order = sorted(nodes)
    string: list[int] = []
    while True:
        for i in order:
            w = wc.e(i, word)
            if w is not None:
                word = w
                string.append(i)
                break
        else:
            return word, tuple(string)


def raise_to_highest(
    b: Element, nodes: Iterable[int], t: CartanType
) -> tuple[Element, tuple[int, ...]]:
    """Greedy smallest-index-first raising; the string is in application order."""
    word, string = raise_word(word_crystal(t), b.word, nodes)
    return b.with_word(word), string


def is_highest(b: Element, nodes: Iterable[int], t: CartanType) -> bool:
    wc = word_crystal(t)
    return all(wc.e(i, b.word) is None for i in nodes)


def is_member(b: Element, t: CartanType) -> bool:
    """True when b lies in the component generated from highest_word(b.shape)."""
    try:
        target = highest_word(b.shape, t)
    except WeightError:
        return False
    top, _ = raise_to_highest(b, t.classical_nodes, t)
    return top.word == target.word


def branch_multiplicities(shape: Shape, t: CartanType, budget: int | None = None) -> Counter[Shape]:
    """X_{n-1} highest weights occurring in B(shape), as shapes in coordinates 2..n."""
    wc = word_crystal(t)
    found: Counter[Shape] = Counter()
    for b in generate_component(shape, t, budget):
        if all(wc.e(i, b.word) is None for i in range(2, t.n + 1)):
            rows = wc.weight(b.word).coords[1:]
            found[Shape.from_partition(rows)] += 1
    return found
