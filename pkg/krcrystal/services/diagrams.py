"""
+/- diagrams lambda <= mu <= Lambda and the maps built on them.

A diagram is stored as its columns (outer, middle, inner), sorted so that all
three partitions weakly decrease. A column carries a "+" when middle > inner
(the + sits at height middle) and a "-" when outer > middle (at height outer).
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from krcrystal.errors import InvalidDiagram, NotHighestWeight, PairNotFound, WeightError
from krcrystal.services.cartan import CartanType, Family, Shape
from krcrystal.services.classical import Element, highest_word, raise_to_highest
from krcrystal.services.letters import Direction
from krcrystal.services.tensor import word_crystal

logger = logging.getLogger("krcrystal.diagrams")

Column = tuple[int, int, int]

PLUS = "+"
MINUS = "-"
_MINUS_ALIASES = {"-", "−"}


def _columns_valid(cols: Sequence[Column]) -> bool:
    for o, m, i in cols:
        if not (0 <= i <= m <= o) or o - m > 1 or m - i > 1:
            return False
    for a, b in zip(cols, cols[1:]):
        if a[0] < b[0] or a[1] < b[1] or a[2] < b[2]:
            return False
    return True


@dataclass(frozen=True)
class PMDiagram:
    columns: tuple[Column, ...]

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(v) for v in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if not _columns_valid(cols):
            raise InvalidDiagram(f"columns {cols} do not form a +/- diagram")

    @classmethod
    def from_columns(cls, columns: Sequence[Column]) -> PMDiagram:
        return cls(tuple(sorted((tuple(c) for c in columns), reverse=True)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[str]], width: int | None = None) -> PMDiagram:
        lengths = [len(row) for row in rows]
        if any(a > b for a, b in zip(lengths, lengths[1:])) or (lengths and lengths[0] == 0):
            raise InvalidDiagram(f"row lengths must weakly increase downwards, got {lengths}")
        columns: list[Column] = []
        for j in range(lengths[-1] if lengths else 0):
            cells = []
            for t in range(len(rows) - 1, -1, -1):
                if len(rows[t]) <= j:
                    break
                cells.append(rows[t][j])
            columns.append(_parse_column(cells))
        if width is not None:
            if width < len(columns):
                raise InvalidDiagram(f"diagram has {len(columns)} columns, more than {width}")
            columns += [(0, 0, 0)] * (width - len(columns))
        return cls(tuple(columns))

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def outer(self) -> Shape:
        return Shape(tuple(c[0] for c in self.columns))

    @property
    def middle(self) -> Shape:
        return Shape(tuple(c[1] for c in self.columns))

    @property
    def inner(self) -> Shape:
        return Shape(tuple(c[2] for c in self.columns))

    def plus_columns(self) -> list[int]:
        return [j for j, (_, m, i) in enumerate(self.columns) if m > i]

    def minus_columns(self) -> list[int]:
        return [j for j, (o, m, _) in enumerate(self.columns) if o > m]

    @property
    def m_plus(self) -> int:
        return len(self.plus_columns())

    @property
    def m_minus(self) -> int:
        return len(self.minus_columns())

    def is_signless(self) -> bool:
        return all(o == m == i for o, m, i in self.columns)

    def padded(self, width: int) -> PMDiagram:
        if width < self.width:
            raise InvalidDiagram(f"diagram has {self.width} columns, more than {width}")
        return PMDiagram(self.columns + ((0, 0, 0),) * (width - self.width))

    def rows(self) -> list[list[str]]:
        height = self.outer.height
        out = []
        for r in range(height, 0, -1):
            row = []
            for o, m, i in self.columns:
                if o < r:
                    break
                row.append("" if r <= i else PLUS if r <= m else MINUS)
            out.append(row)
        return out

    def __str__(self) -> str:
        return str(self.rows())


def _parse_column(cells: list[str]) -> Column:
    """Cells bottom-to-top: empty cells, then at most one +, then at most one -."""
    inner = 0
    while inner < len(cells) and cells[inner] == "":
        inner += 1
    rest = cells[inner:]
    middle = inner
    if rest and rest[0] == PLUS:
        middle += 1
        rest = rest[1:]
    if rest and rest[0] in _MINUS_ALIASES:
        rest = rest[1:]
    if rest:
        raise InvalidDiagram(f"column {cells} is not empty cells, then +, then -")
    return (len(cells), middle, inner)


@dataclass(frozen=True)
class PMPair:
    P: PMDiagram
    p: PMDiagram

    def __post_init__(self) -> None:
        if self.P.inner.nonzero() != self.p.outer.nonzero():
            raise InvalidDiagram(
                f"inner(P)={self.P.inner} differs from outer(p)={self.p.outer}"
            )
        if self.p.width != self.P.width:
            object.__setattr__(self, "p", self.p.padded(self.P.width))


# ── Enumeration ────────────────────────────────────────────────────────


def _column_options(h: int) -> list[Column]:
    opts = [(h, h, h)]
    if h >= 1:
        opts += [(h, h, h - 1), (h, h - 1, h - 1)]
    if h >= 2:
        opts.append((h, h - 1, h - 2))
    return opts


def enumerate_diagrams(outer: Shape, inner: Shape | None = None) -> list[PMDiagram]:
    """All diagrams with the given outer shape, optionally filtered by inner shape."""
    groups = [
        list(itertools.combinations_with_replacement(_column_options(h), len(list(g))))
        for h, g in itertools.groupby(outer.columns)
    ]
    target = inner.nonzero() if inner is not None else None
    out: list[PMDiagram] = []
    for choice in itertools.product(*groups):
        cols = sorted((c for part in choice for c in part), reverse=True)
        if not _columns_valid(cols):
            continue
        diagram = PMDiagram(tuple(cols))
        if target is not None and diagram.inner.nonzero() != target:
            continue
        out.append(diagram)
    return out


# ── Phi and its inverse ────────────────────────────────────────────────


def phi(P: PMDiagram, t: CartanType) -> Element:
    """Fill-and-replace construction of the X_{n-1} highest element of P."""
    if P.outer.height > t.max_height:
        raise InvalidDiagram(f"outer shape {P.outer} is not spinless for {t}")
    cols: list[list[int]] = []
    for o, m, _ in P.columns:
        cells = list(range(2, m + 2))
        if o > m:
            cells.append(-1)
        cols.append(cells)

    # cells in reading order: columns left to right, each column top to bottom
    order = [(j, k) for j, cells in enumerate(cols) for k in range(len(cells) - 1, -1, -1)]
    cursor = 0
    for j in P.plus_columns():
        h = P.columns[j][1]
        while cursor < len(order):
            cj, k = order[cursor]
            cursor += 1
            x = cols[cj][k]
            if x == -1:
                cols[cj][k] = -(h + 1)
                break
            if x == 2 and k == 0:
                length = sum(1 for y in cols[cj] if y > 0)
                if h > length:
                    raise InvalidDiagram(f"no room for the + of height {h} in column {cj}")
                top = length + 1
                cols[cj][:length] = list(range(1, h + 1)) + list(range(h + 2, top + 1))
                break
        else:
            raise InvalidDiagram(f"no site left for the + in column {j} of {P}")
    return Element.from_columns(cols, width=P.width)


def _minus_string(family: Family, n: int, h: int) -> list[int]:
    up = list(range(1, n + 1))
    if family is Family.D:
        return up + list(range(n - 2, h - 1, -1))
    if family is Family.B:
        return up + [n] + list(range(n - 1, h - 1, -1))
    return up + list(range(n - 1, h - 1, -1))


def diagrams_string(P: PMDiagram, t: CartanType, rank: int | None = None) -> tuple[int, ...]:
    """Index sequence a with f_{a_1} ... f_{a_l} highest_word(outer(P)) = phi(P); a_l acts first."""
    n = t.n if rank is None else rank
    string: list[int] = []
    for _, m, i in reversed(P.columns):
        if m == i and i > 0:
            string.extend(range(1, i + 1))
    for o, m, _ in P.columns:
        if o > m:
            string.extend(_minus_string(t.family, n, o))
    return tuple(string)


def apply_string(b: Element, string: Sequence[int], t: CartanType) -> Element:
    word = word_crystal(t).apply(b.word, reversed(string), Direction.LOWER)
    if word is None:
        raise InvalidDiagram(f"lowering string {tuple(string)} is undefined on {b}")
    return b.with_word(word)


def phi_by_string(P: PMDiagram, t: CartanType) -> Element:
    return apply_string(highest_word(P.outer, t), diagrams_string(P, t), t)


def phi_inverse(b: Element, t: CartanType) -> PMDiagram:
    wc = word_crystal(t)
    if any(wc.e(i, b.word) is not None for i in range(2, t.n + 1)):
        raise NotHighestWeight(f"{b} is not highest weight for the nodes 2..{t.n}")
    try:
        inner = Shape.from_partition(wc.weight(b.word).coords[1:], width=b.shape.width)
    except WeightError as exc:
        raise NotHighestWeight(f"{b} has a non-partition X_(n-1) weight") from exc
    minus_mask = [bool(col) and col[-1] < 0 for col in b.columns()]
    candidates = [
        P for P in enumerate_diagrams(b.shape, inner)
        if [o > m for o, m, _ in P.columns] == minus_mask
    ]
    matches = []
    for P in candidates:
        try:
            if phi(P, t) == b:
                matches.append(P)
        except InvalidDiagram:
            continue
    if len(candidates) > 1:
        logger.debug(
            "phi_inverse_search",
            extra={"extra": {"candidates": len(candidates), "element": str(b)}},
        )
    if len(matches) != 1:
        raise NotHighestWeight(f"{b} is not the image of a +/- diagram ({len(matches)} matches)")
    return matches[0]


# ── The involution on diagrams ─────────────────────────────────────────


def s_involution(P: PMDiagram, r: int, s: int | None = None) -> PMDiagram:
    """Swap the +/- counts on heights i = r-1 mod 2 and complement the -+ pairs on i = r mod 2."""
    if s is not None:
        P = P.padded(s)
    by_inner: dict[int, list[Column]] = defaultdict(list)
    for col in P.columns:
        by_inner[col[2]].append(col)
    new: list[Column] = []
    for i, cols in by_inner.items():
        if i >= r:
            if any(c != (i, i, i) for c in cols) or i > r:
                raise InvalidDiagram(f"columns {cols} exceed height {r}")
            new.extend(cols)
            continue
        c = len(cols)
        if (r - 1 - i) % 2 == 0:
            pluses = sum(1 for col in cols if col == (i + 1, i + 1, i))
            minuses = sum(1 for col in cols if col == (i + 1, i, i))
            if pluses + minuses != c:
                raise InvalidDiagram(f"height-{i} columns need exactly one sign: {cols}")
            new += [(i + 1, i + 1, i)] * (c - pluses) + [(i + 1, i, i)] * pluses
        else:
            pairs = sum(1 for col in cols if col == (i + 2, i + 1, i))
            bare = sum(1 for col in cols if col == (i, i, i))
            if pairs + bare != c:
                raise InvalidDiagram(f"height-{i} columns need nothing or a -+ pair: {cols}")
            new += [(i + 2, i + 1, i)] * (c - pairs) + [(i, i, i)] * pairs
    return PMDiagram.from_columns(new)


# ── Pairs of diagrams ──────────────────────────────────────────────────


def _spinless_below(t: CartanType) -> int:
    """Largest spinless column height for the rank n-1 subalgebra on nodes 2..n."""
    return t.max_height - 1


def psi(pair: PMPair, t: CartanType) -> Element:
    if pair.p.outer.height > _spinless_below(t):
        raise InvalidDiagram(f"outer(p)={pair.p.outer} is not spinless for the rank {t.n - 1} subalgebra")
    string = [a + 1 for a in diagrams_string(pair.p, t, rank=t.n - 1)]
    return apply_string(phi(pair.P, t), string, t)


def pair_of(b: Element, t: CartanType) -> PMPair:
    wc = word_crystal(t)
    if any(wc.e(i, b.word) is not None for i in range(3, t.n + 1)):
        raise NotHighestWeight(f"{b} is not highest weight for the nodes 3..{t.n}")
    top, _ = raise_to_highest(b, range(2, t.n + 1), t)
    P = phi_inverse(top, t)
    limit = _spinless_below(t)
    if P.inner.height > limit:
        raise InvalidDiagram(
            f"inner(P)={P.inner} has a column taller than {limit}",
            detail={"element": b.rows(), "P": P.rows()},
            hint=f"pair_of needs inner(P) columns of height at most {limit} for the rank {t.n - 1} subalgebra.",
        )
    for p in enumerate_diagrams(P.inner):
        try:
            candidate = PMPair(P, p.padded(P.width))
            if psi(candidate, t) == b:
                return candidate
        except InvalidDiagram:
            continue
    raise PairNotFound(f"no diagram pair maps to {b}")


def e1_pair(pair: PMPair) -> PMPair | None:
    """Action of e_1 on the pair (P, p) by the +/- pairing rule."""
    P, p = pair.P, pair.p
    P_plus, P_minus = P.plus_columns(), P.minus_columns()
    p_plus, p_minus = p.plus_columns(), p.minus_columns()
    used_P_plus: set[int] = set()
    used_P_minus: set[int] = set()
    used_p_plus: set[int] = set()
    used_p_minus: set[int] = set()

    for j in p_plus:
        free = [k for k in P_plus if k <= j and k not in used_P_plus]
        if free:
            used_P_plus.add(min(free))
            used_p_plus.add(j)
    for j in p_minus:
        free = [k for k in P_minus if k <= j and k not in used_P_minus]
        if free:
            used_P_minus.add(max(free))
            used_p_minus.add(j)
    for j in p_plus:
        if j in used_p_plus:
            continue
        free = [k for k in p_minus if k not in used_p_minus]
        if free:
            used_p_minus.add(min(free))
            used_p_plus.add(j)

    unpaired_plus = [j for j in p_plus if j not in used_p_plus]
    if unpaired_plus:
        return _move_plus_up(pair, max(unpaired_plus))
    unpaired_minus = [k for k in P_minus if k not in used_P_minus]
    if unpaired_minus:
        return _move_minus_down(pair, min(unpaired_minus))
    return None


def _move_plus_up(pair: PMPair, j: int) -> PMPair:
    # The + cell leaves p; the other signs of its column slide down one cell.
    # inner(P) loses the matching box in its last column of that height.
    big = list(pair.P.columns)
    small = list(pair.p.columns)
    o, m, i = small[j]
    small[j] = (o - 1, m - 1, i)
    targets = [k for k, (_, M, I) in enumerate(big) if I == o and M == I]
    if not targets:
        raise InvalidDiagram(f"no column of inner height {o} in {pair.P} can take a +")
    O, M, I = big[targets[-1]]
    big[targets[-1]] = (O, I, I - 1)
    return PMPair(PMDiagram.from_columns(big), PMDiagram.from_columns(small))


def _move_minus_down(pair: PMPair, j: int) -> PMPair:
    # inner(P) gains a box on its first column of height I; the - goes on
    # top of the p column sitting under that box.
    big = list(pair.P.columns)
    small = list(pair.p.columns)
    O, M, I = big[j]
    big[j] = (O, M + 1, I + 1)
    targets = [k for k, (o, m, _) in enumerate(small) if o == I and o == m]
    if not targets:
        raise InvalidDiagram(f"no column of height {I} in {pair.p} can take a -")
    o, m, i = small[targets[0]]
    small[targets[0]] = (o + 1, m, i)
    return PMPair(PMDiagram.from_columns(big), PMDiagram.from_columns(small))
