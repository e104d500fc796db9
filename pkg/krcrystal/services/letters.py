"""The vector crystal B(omega_1) and the affine crystal B^{1,1}, arrow by arrow."""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

import networkx as nx

from krcrystal.errors import InvalidLetter, WeightError
from krcrystal.services.cartan import CartanType, ClassicalWeight, Family


class Direction(str, Enum):
    LOWER = "f"
    RAISE = "e"


def _d_arrows(n: int) -> dict[int, tuple[tuple[int, int], ...]]:
    arrows = {i: ((i, i + 1), (-(i + 1), -i)) for i in range(1, n)}
    arrows[n] = ((n - 1, -n), (n, -(n - 1)))
    arrows[0] = ((-2, 1), (-1, 2))
    return arrows


def _b_arrows(n: int) -> dict[int, tuple[tuple[int, int], ...]]:
    arrows = {i: ((i, i + 1), (-(i + 1), -i)) for i in range(1, n)}
    arrows[n] = ((n, 0), (0, -n))
    arrows[0] = ((-2, 1), (-1, 2))
    return arrows


def _c_arrows(n: int) -> dict[int, tuple[tuple[int, int], ...]]:
    arrows = {i: ((i, i + 1), (-(i + 1), -i)) for i in range(1, n)}
    arrows[n] = ((n, -n),)
    arrows[0] = ((-2, 1), (-1, 2))
    return arrows


_ARROWS = {Family.D: _d_arrows, Family.B: _b_arrows, Family.A2ODD: _c_arrows}


class LetterCrystal:
    """Lookup tables for f_i, e_i, eps_i, phi_i on single letters, i = 0..n."""

    def __init__(self, cartan: CartanType) -> None:
        self.cartan = cartan
        n = cartan.n
        middle = (0,) if cartan.family is Family.B else ()
        self.alphabet: tuple[int, ...] = tuple(range(1, n + 1)) + middle + tuple(range(-n, 0))
        self._known = frozenset(self.alphabet)
        arrows = _ARROWS[cartan.family](n)
        self.arrows = arrows
        self.lower: dict[int, dict[int, int]] = {i: dict(pairs) for i, pairs in arrows.items()}
        self.raise_: dict[int, dict[int, int]] = {
            i: {dst: src for src, dst in pairs} for i, pairs in arrows.items()
        }
        self.phi: dict[int, dict[int, int]] = {}
        self.eps: dict[int, dict[int, int]] = {}
        for i in cartan.nodes:
            self.phi[i] = {x: self._run(self.lower[i], x) for x in self.alphabet}
            self.eps[i] = {x: self._run(self.raise_[i], x) for x in self.alphabet}

    @staticmethod
    def _run(table: dict[int, int], x: int) -> int:
        steps = 0
        while x in table:
            x = table[x]
            steps += 1
        return steps

    def check(self, x: int) -> None:
        if x not in self._known:
            raise InvalidLetter(f"{x!r} is not a letter of {self.cartan}")

    def step(self, i: int, x: int, direction: Direction) -> int | None:
        self.check(x)
        table = self.lower if direction is Direction.LOWER else self.raise_
        if i not in table:
            raise WeightError(f"node {i} out of range for {self.cartan}")
        return table[i].get(x)

    def weight(self, x: int) -> ClassicalWeight:
        self.check(x)
        coords = [0] * self.cartan.n
        if x > 0:
            coords[x - 1] = 1
        elif x < 0:
            coords[-x - 1] = -1
        return ClassicalWeight(tuple(coords))

    def graph(self, affine: bool = True) -> nx.MultiDiGraph:
        """B^{1,1} (or B(omega_1) without 0-arrows) as a labeled multigraph."""
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.alphabet)
        for i, pairs in sorted(self.arrows.items()):
            if i == 0 and not affine:
                continue
            for src, dst in pairs:
                g.add_edge(src, dst, key=i, label=i)
        return g


@lru_cache(maxsize=None)
def letter_crystal(cartan: CartanType) -> LetterCrystal:
    return LetterCrystal(cartan)


def letter_step(i: int, x: int, direction: Direction, t: CartanType) -> int | None:
    return letter_crystal(t).step(i, x, direction)


def letter_weight(x: int, t: CartanType) -> ClassicalWeight:
    return letter_crystal(t).weight(x)
