"""
Root and weight data for the affine families D_n^(1), B_n^(1), A_{2n-1}^(2).

Classical weights live in the epsilon basis (integer vectors of length n);
affine weights are Lambda-coordinate vectors (l_0, ..., l_n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from krcrystal.errors import InvalidCartanType, SpinNodeError, WeightError


class Family(str, Enum):
    D = "D"
    B = "B"
    A2ODD = "A2odd"


_CLASSICAL_LETTER = {Family.D: "D", Family.B: "B", Family.A2ODD: "C"}


@dataclass(frozen=True)
class CartanType:
    family: Family
    rank: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, "family", Family(self.family))
            except ValueError as exc:
                raise InvalidCartanType(f"unknown family {self.family!r}") from exc
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or self.rank < 3:
            raise InvalidCartanType(f"rank must be an integer >= 3, got {self.rank!r}")
        if self.family is Family.D and self.rank < 4:
            raise InvalidCartanType(f"type D needs rank >= 4, got {self.rank}")

    @classmethod
    def from_triple(cls, letter: str, size: int, twist: int) -> CartanType:
        letter = str(letter).strip().upper()
        if twist == 1 and letter in ("D", "B"):
            return cls(Family(letter), size)
        if twist == 2 and letter == "A" and isinstance(size, int) and size >= 5 and size % 2 == 1:
            return cls(Family.A2ODD, (size + 1) // 2)
        raise InvalidCartanType(f"unsupported affine type ({letter}, {size}, {twist})")

    @classmethod
    def parse(cls, text: str) -> CartanType:
        """Parse "D,4,1" / "A,5,2" (brackets and quotes tolerated)."""
        cleaned = text.strip().strip("[]").replace('"', "").replace("'", "")
        parts = [p.strip() for p in cleaned.split(",") if p.strip()]
        if len(parts) != 3:
            raise InvalidCartanType(f"expected a triple like D,4,1, got {text!r}")
        try:
            size, twist = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise InvalidCartanType(f"non-integer rank or twist in {text!r}") from exc
        return cls.from_triple(parts[0], size, twist)

    @property
    def n(self) -> int:
        return self.rank

    def triple(self) -> tuple[str, int, int]:
        if self.family is Family.A2ODD:
            return ("A", 2 * self.rank - 1, 2)
        return (self.family.value, self.rank, 1)

    @property
    def classical(self) -> str:
        return _CLASSICAL_LETTER[self.family]

    @property
    def spin_nodes(self) -> frozenset[int]:
        if self.family is Family.D:
            return frozenset({self.rank - 1, self.rank})
        if self.family is Family.B:
            return frozenset({self.rank})
        return frozenset()

    @property
    def max_height(self) -> int:
        """Largest column height of a spinless classical weight (= largest KR index r)."""
        if self.family is Family.D:
            return self.rank - 2
        if self.family is Family.B:
            return self.rank - 1
        return self.rank

    def check_kr_index(self, r: int) -> None:
        if isinstance(r, bool) or not isinstance(r, int) or r < 1:
            raise SpinNodeError(f"KR index r must be a positive integer, got {r!r}")
        if r > self.max_height:
            raise SpinNodeError(f"r={r} is a spin node or out of range for {self}")

    @property
    def nodes(self) -> range:
        return range(0, self.rank + 1)

    @property
    def classical_nodes(self) -> range:
        return range(1, self.rank + 1)

    def level_coefficients(self) -> tuple[int, ...]:
        n = self.rank
        coeffs = [1, 1] + [2] * (n - 1)
        if self.family is Family.D:
            coeffs[n - 1] = 1
            coeffs[n] = 1
        elif self.family is Family.B:
            coeffs[n] = 1
        return tuple(coeffs)

    def __str__(self) -> str:
        letter, size, twist = self.triple()
        return f"{letter}_{size}^({twist})"


# ── Shapes ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Shape:
    """Column heights h_1 >= ... >= h_s >= 0; trailing zero columns are significant."""

    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        if any((not isinstance(h, int)) or h < 0 for h in cols):
            raise WeightError(f"column heights must be nonnegative integers: {cols}")
        if any(a < b for a, b in zip(cols, cols[1:])):
            raise WeightError(f"column heights must weakly decrease: {cols}")

    @classmethod
    def from_partition(cls, rows: Iterable[int], width: int | None = None) -> Shape:
        parts = [int(x) for x in rows if int(x) != 0]
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise WeightError(f"not a partition: {tuple(parts)}")
        ncols = parts[0] if parts else 0
        cols = [sum(1 for x in parts if x > j) for j in range(ncols)]
        if width is not None:
            if width < ncols:
                raise WeightError(f"partition {tuple(parts)} is wider than {width} columns")
            cols += [0] * (width - ncols)
        return cls(tuple(cols))

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def size(self) -> int:
        return sum(self.columns)

    @property
    def height(self) -> int:
        return self.columns[0] if self.columns else 0

    @property
    def rows(self) -> tuple[int, ...]:
        """Row lengths bottom-up (the partition)."""
        return tuple(sum(1 for h in self.columns if h > i) for i in range(self.height))

    def nonzero(self) -> Shape:
        return Shape(tuple(h for h in self.columns if h))

    def padded(self, width: int) -> Shape:
        if width < self.width:
            raise WeightError(f"cannot pad {self.columns} to width {width}")
        return Shape(self.columns + (0,) * (width - self.width))

    def c(self, i: int) -> int:
        """Number of columns of height exactly i."""
        return sum(1 for h in self.columns if h == i)

    def __str__(self) -> str:
        return "(" + ",".join(str(h) for h in self.columns) + ")"


# ── Weights ────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class ClassicalWeight:
    coords: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> ClassicalWeight:
        return cls((0,) * n)

    def __add__(self, other: ClassicalWeight) -> ClassicalWeight:
        return ClassicalWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: ClassicalWeight) -> ClassicalWeight:
        return ClassicalWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k: int) -> ClassicalWeight:
        return ClassicalWeight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__


@dataclass(frozen=True, order=True)
class AffineWeight:
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))

    @classmethod
    def fundamental(cls, n: int, k: int, multiple: int = 1) -> AffineWeight:
        coords = [0] * (n + 1)
        coords[k] = multiple
        return cls(tuple(coords))

    @classmethod
    def parse(cls, text: str) -> AffineWeight:
        cleaned = text.strip().strip("[]")
        try:
            return cls(tuple(int(p) for p in cleaned.split(",") if p.strip()))
        except ValueError as exc:
            raise WeightError(f"weight must be comma-separated integers, got {text!r}") from exc

    def __add__(self, other: AffineWeight) -> AffineWeight:
        return AffineWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def swap(self, i: int, j: int) -> AffineWeight:
        coords = list(self.coords)
        coords[i], coords[j] = coords[j], coords[i]
        return AffineWeight(tuple(coords))

    def __str__(self) -> str:
        terms = []
        for k, m in enumerate(self.coords):
            if m:
                terms.append(f"{'' if m == 1 else m}L{k}")
        return "+".join(terms) or "0"


def level(w: AffineWeight, t: CartanType) -> int:
    if len(w.coords) != t.n + 1:
        raise WeightError(f"weight {w.coords} has {len(w.coords)} coordinates, expected {t.n + 1}")
    if any(x < 0 for x in w.coords):
        raise WeightError(f"weight {w.coords} has negative coordinates")
    return sum(c * x for c, x in zip(t.level_coefficients(), w.coords))


def dominant_weights(s: int, t: CartanType) -> list[AffineWeight]:
    """All (l_0..l_n) of level s, in lexicographic order."""
    if s < 0:
        raise WeightError(f"level must be nonnegative, got {s}")
    coeffs = t.level_coefficients()
    out: list[AffineWeight] = []

    def extend(prefix: list[int], remaining: int) -> None:
        k = len(prefix)
        if k == len(coeffs):
            if remaining == 0:
                out.append(AffineWeight(tuple(prefix)))
            return
        for m in range(remaining // coeffs[k] + 1):
            prefix.append(m)
            extend(prefix, remaining - m * coeffs[k])
            prefix.pop()

    extend([], s)
    return out


def classical_shapes(r: int, s: int, t: CartanType) -> list[Shape]:
    """Shapes obtained from the r x s rectangle by removing vertical dominoes."""
    t.check_kr_index(r)
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise WeightError(f"s must be a positive integer, got {s!r}")
    heights = list(range(r, -1, -2))
    return [Shape(combo) for combo in itertools.combinations_with_replacement(heights, s)]


def sw_r(r: int, s: int, t: CartanType) -> ClassicalWeight:
    return ClassicalWeight(tuple(s if j < r else 0 for j in range(t.n)))


def simple_root(i: int, t: CartanType) -> ClassicalWeight:
    n = t.n
    x = [0] * n
    if i == 0:
        x[0] = x[1] = -1
    elif 1 <= i < n:
        x[i - 1], x[i] = 1, -1
    elif i == n:
        if t.family is Family.D:
            x[n - 2] = x[n - 1] = 1
        elif t.family is Family.B:
            x[n - 1] = 1
        else:
            x[n - 1] = 2
    else:
        raise WeightError(f"node {i} out of range for {t}")
    return ClassicalWeight(tuple(x))


def h_pairing(i: int, w: ClassicalWeight, t: CartanType) -> int:
    x = w.coords
    n = t.n
    if len(x) != n:
        raise WeightError(f"weight {x} has {len(x)} coordinates, expected {n}")
    if i == 0:
        return -(x[0] + x[1])
    if 1 <= i < n:
        return x[i - 1] - x[i]
    if i == n:
        if t.family is Family.D:
            return x[n - 2] + x[n - 1]
        if t.family is Family.B:
            # alpha_n = eps_n is short, so the coroot is 2 eps_n
            return 2 * x[n - 1]
        return x[n - 1]
    raise WeightError(f"node {i} out of range for {t}")


def root_coordinates(v: ClassicalWeight, t: CartanType) -> tuple[Fraction, ...]:
    """Coefficients c_1..c_n with v = sum c_i alpha_i."""
    x = v.coords
    n = t.n
    partial = list(itertools.accumulate(x))
    coords = [Fraction(p) for p in partial]
    if t.family is Family.D:
        coords[n - 2] = Fraction(partial[n - 2] - x[n - 1], 2)
        coords[n - 1] = Fraction(partial[n - 1], 2)
    elif t.family is Family.A2ODD:
        coords[n - 1] = Fraction(partial[n - 1], 2)
    return tuple(coords)
