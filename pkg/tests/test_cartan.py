from fractions import Fraction

import pytest

from helpers import B3, C3, D4, D8
from krcrystal.errors import InvalidCartanType, SpinNodeError, WeightError
from krcrystal.services.cartan import (
    AffineWeight,
    CartanType,
    ClassicalWeight,
    Family,
    Shape,
    classical_shapes,
    dominant_weights,
    h_pairing,
    level,
    root_coordinates,
    simple_root,
    sw_r,
)


def test_parse_triples():
    assert CartanType.parse("D,4,1") == D4
    assert CartanType.parse("[B, 3, 1]") == B3
    t = CartanType.parse("A,5,2")
    assert t == C3
    assert t.triple() == ("A", 5, 2)
    assert str(t) == "A_5^(2)"
    assert t.classical == "C"


@pytest.mark.parametrize("text", ["D,3,1", "A,4,2", "E,6,1", "D,4", "D,x,1", "A,5,1"])
def test_parse_rejects_unsupported(text):
    with pytest.raises(InvalidCartanType):
        CartanType.parse(text)


def test_rank_bounds():
    with pytest.raises(InvalidCartanType):
        CartanType(Family.B, 2)


def test_spin_nodes_and_heights():
    assert D4.spin_nodes == {3, 4}
    assert B3.spin_nodes == {3}
    assert C3.spin_nodes == frozenset()
    assert (D4.max_height, B3.max_height, C3.max_height) == (2, 2, 3)
    with pytest.raises(SpinNodeError):
        D4.check_kr_index(3)
    with pytest.raises(SpinNodeError):
        B3.check_kr_index(3)
    C3.check_kr_index(3)


def test_level_coefficients():
    assert D4.level_coefficients() == (1, 1, 2, 1, 1)
    assert B3.level_coefficients() == (1, 1, 2, 1)
    assert C3.level_coefficients() == (1, 1, 2, 2)
    assert level(AffineWeight((1, 2, 1, 1, 0, 1, 0, 0, 0)), D8) == 9


def test_level_rejects_bad_weights():
    with pytest.raises(WeightError):
        level(AffineWeight((1, 0)), D4)
    with pytest.raises(WeightError):
        level(AffineWeight((1, -1, 0, 0, 0)), D4)


def test_classical_shapes_remove_vertical_dominoes():
    assert classical_shapes(2, 2, D4) == [Shape((2, 2)), Shape((2, 0)), Shape((0, 0))]
    assert classical_shapes(3, 2, D8) == [Shape((3, 3)), Shape((3, 1)), Shape((1, 1))]
    with pytest.raises(WeightError):
        classical_shapes(1, 0, D4)


def test_dominant_weights_of_level_two():
    weights = dominant_weights(2, D4)
    assert len(weights) == 11
    assert weights == sorted(weights)
    assert all(level(w, D4) == 2 for w in weights)
    assert AffineWeight((0, 0, 1, 0, 0)) in weights


def test_shape_conversions():
    shape = Shape.from_partition((3, 1), width=4)
    assert shape.columns == (2, 1, 1, 0)
    assert shape.rows == (3, 1)
    assert shape.nonzero() == Shape((2, 1, 1))
    assert shape.c(1) == 2
    assert shape.size == 4
    with pytest.raises(WeightError):
        Shape((1, 2))
    with pytest.raises(WeightError):
        Shape.from_partition((3,), width=2)


def test_affine_weight_text():
    w = AffineWeight.parse("1,2,0")
    assert w.coords == (1, 2, 0)
    assert str(w) == "L0+2L1"
    assert w.swap(0, 1).coords == (2, 1, 0)
    assert AffineWeight.fundamental(3, 2, 4).coords == (0, 0, 4, 0)
    with pytest.raises(WeightError):
        AffineWeight.parse("1,a")


def test_roots_and_pairings():
    assert simple_root(0, D4).coords == (-1, -1, 0, 0)
    assert simple_root(4, D4).coords == (0, 0, 1, 1)
    assert simple_root(3, B3).coords == (0, 0, 1)
    assert simple_root(3, C3).coords == (0, 0, 2)
    assert h_pairing(0, ClassicalWeight((1, 1, 0, 0)), D4) == -2
    assert h_pairing(3, ClassicalWeight((0, 0, 1)), B3) == 2
    assert h_pairing(3, ClassicalWeight((0, 0, 1)), C3) == 1
    assert h_pairing(4, ClassicalWeight((0, 0, 1, -1)), D4) == 0


@pytest.mark.parametrize("t", [D4, B3, C3])
def test_simple_roots_pair_to_two(t):
    for i in t.classical_nodes:
        assert h_pairing(i, simple_root(i, t), t) == 2


@pytest.mark.parametrize("t", [D4, B3, C3])
def test_root_coordinates_invert_simple_roots(t):
    for i in t.classical_nodes:
        coords = root_coordinates(simple_root(i, t), t)
        assert coords == tuple(Fraction(1 if j == i else 0) for j in t.classical_nodes)


def test_root_coordinates_of_highest_weight():
    assert root_coordinates(sw_r(2, 2, D4), D4) == (2, 4, 2, 2)
