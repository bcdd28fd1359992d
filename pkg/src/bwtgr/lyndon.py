"""Lyndon words: predicate, Chen-Fox-Lyndon factorization, word type, generation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import EmptyWordError
from .words import Word


@dataclass(frozen=True)
class LyndonFactorization:
    """The unique factorization of a word into nonincreasing Lyndon factors."""

    factors: tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("factorization needs at least one factor")
        for left, right in zip(self.factors, self.factors[1:]):
            if left < right:
                raise ValueError("factors must be nonincreasing")

    def word(self) -> Word:
        """Concatenation of the factors: the word that was factorized."""
        return b"".join(self.factors)


def lyndon_factorize(w: Word) -> LyndonFactorization:
    """Factor ``w`` as u1 u2 ... um with every ui Lyndon and u1 >= u2 >= ... >= um.

    Duval's algorithm, O(n) time and O(1) extra state per phase.
    """
    if not w:
        raise EmptyWordError("cannot factorize the empty word")
    factors = []
    n = len(w)
    k = 0
    while k < n:
        i, j = k, k + 1
        while j < n and w[i] <= w[j]:
            i = k if w[i] < w[j] else i + 1
            j += 1
        period = j - i
        while k <= i:
            factors.append(w[k:k + period])
            k += period
    return LyndonFactorization(tuple(factors))


def is_lyndon(w: Word) -> bool:
    """True iff ``w`` is primitive and strictly smaller than all its proper rotations."""
    if not w:
        raise EmptyWordError("the empty word is not Lyndon")
    return lyndon_factorize(w).factors == (w,)


def word_type(w: Word) -> tuple[int, ...]:
    """Factor lengths of the Lyndon factorization, sorted descending.

    A partition of len(w); a single part equal to len(w) marks a Lyndon word.
    """
    if not w:
        raise EmptyWordError("the empty word has no type")
    return tuple(sorted((len(f) for f in lyndon_factorize(w).factors), reverse=True))


def lyndon_words(n: int, alphabet: bytes) -> Iterator[Word]:
    """Generate the Lyndon words of length exactly ``n`` over ``alphabet``.

    Duval's successor generation, emitting words in increasing lexicographic
    order. The alphabet is deduplicated and sorted first.
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    letters = sorted(set(alphabet))
    if not letters:
        raise ValueError("alphabet must be nonempty")
    top = len(letters) - 1
    stack = [0]
    while True:
        if len(stack) == n:
            yield bytes(letters[i] for i in stack)
        # extend periodically to full length, then increment the last
        # letter that is not yet maximal
        period = len(stack)
        while len(stack) < n:
            stack.append(stack[len(stack) - period])
        while stack and stack[-1] == top:
            stack.pop()
        if not stack:
            return
        stack[-1] += 1
