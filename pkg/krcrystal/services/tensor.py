"""
Signature rule on tensor words b_L (x) ... (x) b_1.

The i-signature lists the factors left to right, each contributing phi_i(b)
minus signs followed by eps_i(b) plus signs. Adjacent "+-" pairs cancel;
f_i acts on the rightmost surviving "-", e_i on the leftmost surviving "+".
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from krcrystal.services.cartan import CartanType, ClassicalWeight
from krcrystal.services.letters import Direction, LetterCrystal, letter_crystal

Word = tuple[int, ...]


class WordCrystal:
    def __init__(self, cartan: CartanType) -> None:
        self.cartan = cartan
        self.letters: LetterCrystal = letter_crystal(cartan)

    def _reduce(self, i: int, word: Word) -> tuple[list[int], list[int]]:
        """Positions of the unmatched minus and plus signs of the reduced signature."""
        phi = self.letters.phi[i]
        eps = self.letters.eps[i]
        minus: list[int] = []
        plus: list[int] = []
        for pos, x in enumerate(word):
            for _ in range(phi[x]):
                if plus:
                    plus.pop()
                else:
                    minus.append(pos)
            plus.extend([pos] * eps[x])
        return minus, plus

    def check(self, word: Iterable[int]) -> None:
        for x in word:
            self.letters.check(x)

    def step(self, i: int, word: Word, direction: Direction) -> Word | None:
        minus, plus = self._reduce(i, word)
        if direction is Direction.LOWER:
            if not minus:
                return None
            pos = minus[-1]
            table = self.letters.lower[i]
        else:
            if not plus:
                return None
            pos = plus[0]
            table = self.letters.raise_[i]
        return word[:pos] + (table[word[pos]],) + word[pos + 1:]

    def f(self, i: int, word: Word) -> Word | None:
        return self.step(i, word, Direction.LOWER)

    def e(self, i: int, word: Word) -> Word | None:
        return self.step(i, word, Direction.RAISE)

    def eps_phi(self, i: int, word: Word) -> tuple[int, int]:
        minus, plus = self._reduce(i, word)
        return len(plus), len(minus)

    def eps(self, i: int, word: Word) -> int:
        return self.eps_phi(i, word)[0]

    def phi(self, i: int, word: Word) -> int:
        return self.eps_phi(i, word)[1]

    def weight(self, word: Word) -> ClassicalWeight:
        coords = [0] * self.cartan.n
        for x in word:
            if x > 0:
                coords[x - 1] += 1
            elif x < 0:
                coords[-x - 1] -= 1
        return ClassicalWeight(tuple(coords))

    def apply(self, word: Word, indices: Iterable[int], direction: Direction) -> Word | None:
        """Apply the operators in the given order; None as soon as one is undefined."""
        current: Word | None = word
        for i in indices:
            current = self.step(i, current, direction)
            if current is None:
                return None
        return current


@lru_cache(maxsize=None)
def word_crystal(cartan: CartanType) -> WordCrystal:
    return WordCrystal(cartan)


def word_step(i: int, w: Word, direction: Direction, t: CartanType) -> Word | None:
    return word_crystal(t).step(i, tuple(w), direction)


def word_eps_phi(i: int, w: Word, t: CartanType) -> tuple[int, int]:
    return word_crystal(t).eps_phi(i, tuple(w))


def word_weight(w: Word, t: CartanType) -> ClassicalWeight:
    return word_crystal(t).weight(tuple(w))
