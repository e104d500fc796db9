"""Oracles and hypothesis strategies shared by the test modules."""

from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from krcrystal.services.cartan import CartanType, Family, Shape
from krcrystal.services.classical import Element, highest_word
from krcrystal.services.kr import KRCrystal
from krcrystal.services.tensor import word_crystal

D4 = CartanType(Family.D, 4)
D5 = CartanType(Family.D, 5)
D6 = CartanType(Family.D, 6)
D8 = CartanType(Family.D, 8)
B3 = CartanType(Family.B, 3)
B4 = CartanType(Family.B, 4)
B5 = CartanType(Family.B, 5)
C3 = CartanType(Family.A2ODD, 3)
C4 = CartanType(Family.A2ODD, 4)
C5 = CartanType(Family.A2ODD, 5)


# ── Weyl dimension oracle ──────────────────────────────────────────────

def _rho(t: CartanType) -> list[Fraction]:
    n = t.n
    if t.family is Family.D:
        return [Fraction(n - 1 - k) for k in range(n)]
    if t.family is Family.B:
        return [Fraction(2 * (n - k) - 1, 2) for k in range(n)]
    return [Fraction(n - k) for k in range(n)]


def _positive_roots(t: CartanType) -> list[list[int]]:
    n = t.n
    roots = []
    for i, j in combinations(range(n), 2):
        for sign in (1, -1):
            v = [0] * n
            v[i], v[j] = 1, sign
            roots.append(v)
    for i in range(n):
        if t.family is Family.B:
            v = [0] * n
            v[i] = 1
            roots.append(v)
        elif t.family is Family.A2ODD:
            v = [0] * n
            v[i] = 2
            roots.append(v)
    return roots


def weyl_dimension(shape: Shape, t: CartanType) -> int:
    rows = list(shape.rows) + [0] * (t.n - len(shape.rows))
    rho = _rho(t)
    dim = Fraction(1)
    for alpha in _positive_roots(t):
        num = sum((lam + r) * a for lam, r, a in zip(rows, rho, alpha))
        den = sum(r * a for r, a in zip(rho, alpha))
        dim *= num / den
    assert dim.denominator == 1
    return int(dim)


# ── Strategies ─────────────────────────────────────────────────────────

def lowered(crystal: KRCrystal, shape_index: int, path: list[int]) -> Element:
    """Walk down from a highest element, skipping undefined steps."""
    wc = word_crystal(crystal.cartan)
    shapes = crystal.shapes
    b = highest_word(shapes[shape_index % len(shapes)], crystal.cartan)
    word = b.word
    for i in path:
        w = wc.f(i, word)
        if w is not None:
            word = w
    return b.with_word(word)


def elements_of(crystal: KRCrystal, max_steps: int = 30) -> st.SearchStrategy[Element]:
    n = crystal.cartan.n
    return st.builds(
        lambda k, path: lowered(crystal, k, path),
        st.integers(min_value=0, max_value=len(crystal.shapes) - 1),
        st.lists(st.integers(min_value=1, max_value=n), max_size=max_steps),
    )
