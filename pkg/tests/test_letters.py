import pytest

from helpers import B3, C3, D4
from krcrystal.errors import InvalidLetter, WeightError
from krcrystal.services.cartan import h_pairing
from krcrystal.services.letters import Direction, letter_crystal, letter_step, letter_weight


def test_alphabets():
    assert letter_crystal(D4).alphabet == (1, 2, 3, 4, -4, -3, -2, -1)
    assert letter_crystal(B3).alphabet == (1, 2, 3, 0, -3, -2, -1)
    assert letter_crystal(C3).alphabet == (1, 2, 3, -3, -2, -1)


def test_node_n_arrows():
    assert letter_step(4, 3, Direction.LOWER, D4) == -4
    assert letter_step(4, 4, Direction.LOWER, D4) == -3
    assert letter_step(4, -4, Direction.RAISE, D4) == 3
    assert letter_step(3, 3, Direction.LOWER, B3) == 0
    assert letter_step(3, 0, Direction.LOWER, B3) == -3
    assert letter_step(3, 3, Direction.LOWER, C3) == -3
    assert letter_step(3, 2, Direction.LOWER, C3) is None


def test_zero_arrows():
    for t in (D4, B3, C3):
        assert letter_step(0, -1, Direction.LOWER, t) == 2
        assert letter_step(0, -2, Direction.LOWER, t) == 1
        assert letter_step(0, 1, Direction.RAISE, t) == -2


def test_b_family_strings_have_length_two():
    lc = letter_crystal(B3)
    assert lc.phi[3][3] == 2
    assert lc.eps[3][-3] == 2
    assert (lc.eps[3][0], lc.phi[3][0]) == (1, 1)


@pytest.mark.parametrize("t", [D4, B3, C3])
def test_string_lengths_match_weights(t):
    lc = letter_crystal(t)
    for x in lc.alphabet:
        for i in t.nodes:
            assert lc.phi[i][x] - lc.eps[i][x] == h_pairing(i, lc.weight(x), t)


@pytest.mark.parametrize("t, edges", [(D4, 10), (B3, 8), (C3, 7)])
def test_graph_edge_counts(t, edges):
    g = letter_crystal(t).graph()
    assert g.number_of_nodes() == len(letter_crystal(t).alphabet)
    assert g.number_of_edges() == edges
    classical = letter_crystal(t).graph(affine=False)
    assert classical.number_of_edges() == edges - 2


def test_bad_letters():
    with pytest.raises(InvalidLetter):
        letter_weight(5, D4)
    with pytest.raises(InvalidLetter):
        letter_weight(0, D4)
    with pytest.raises(WeightError):
        letter_step(5, 1, Direction.LOWER, D4)
    assert letter_weight(-2, D4).coords == (0, -1, 0, 0)
    assert letter_weight(0, B3).coords == (0, 0, 0)
