"""Byte-alphabet word primitives: Parikh vectors, rotations, primitivity, ranks.

Words are plain ``bytes``; the alphabet is 0..255 in numeric order, so the
built-in lexicographic comparison of ``bytes`` is the word order used
throughout the package.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import EmptyWordError, NotPrimitiveError

Word = bytes


@dataclass(frozen=True)
class ParikhVector:
    """Letter multiplicities of a word: (letter, count) pairs sorted by letter.

    Only letters that actually occur are listed, so every count is positive
    and the vector is "positive" over its own alphabet by construction.
    """

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        letters = [letter for letter, _ in self.counts]
        if letters != sorted(set(letters)):
            raise ValueError("letters must be strictly increasing")
        for letter, count in self.counts:
            if not 0 <= letter <= 255:
                raise ValueError(f"letter {letter} outside byte range")
            if count <= 0:
                raise ValueError(f"count for letter {letter} must be positive")

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(letter for letter, _ in self.counts)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(count for _, count in self.counts)

    @property
    def total(self) -> int:
        """Length of any word with these counts."""
        return sum(count for _, count in self.counts)

    @property
    def k(self) -> int:
        """Number of distinct letters."""
        return len(self.counts)


def parikh(w: Word) -> ParikhVector:
    """Count the occurrences of each letter of ``w``, in letter order."""
    return ParikhVector(tuple(sorted(Counter(w).items())))


def primitive_root(w: Word) -> Word:
    """Shortest u with w = u**k; equals w itself exactly when w is primitive."""
    if not w:
        raise EmptyWordError("the empty word has no primitive root")
    # smallest left rotation fixing w; it divides len(w)
    period = (w + w).find(w, 1)
    return w[:period]


def is_primitive(w: Word) -> bool:
    """True iff ``w`` is not u**k for any shorter u (all n rotations distinct)."""
    if not w:
        raise EmptyWordError("primitivity is undefined for the empty word")
    return (w + w).find(w, 1) == len(w)


def ensure_primitive(w: Word) -> None:
    """Raise EmptyWordError or NotPrimitiveError unless ``w`` is primitive."""
    if not w:
        raise EmptyWordError("operation requires a nonempty word")
    root = primitive_root(w)
    if len(root) != len(w):
        raise NotPrimitiveError(w, root)


def rotate(w: Word, k: int) -> Word:
    """Left rotation: move the first k letters (mod n) to the end."""
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def conjugates(w: Word) -> list[Word]:
    """All n rotations of a primitive word, sorted ascending (all distinct)."""
    ensure_primitive(w)
    return sorted(rotate(w, k) for k in range(len(w)))


def rank(i: int, y: Word) -> int:
    """Occurrences of y's i-th letter within the length-i prefix (1-indexed)."""
    if not 1 <= i <= len(y):
        raise IndexError(f"rank index {i} out of range 1..{len(y)}")
    return y.count(y[i - 1], 0, i)


def least_rotation_index(w: Word) -> int:
    """0-based start of the lexicographically least rotation of ``w``.

    Booth's algorithm, O(n). The least rotation is unique when ``w`` is
    primitive; otherwise any start of it may be returned.
    """
    if not w:
        raise EmptyWordError("the empty word has no rotations")
    n = len(w)
    doubled = w + w
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        letter = doubled[j]
        i = fail[j - k - 1]
        while i != -1 and letter != doubled[k + i + 1]:
            if letter < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if letter != doubled[k + i + 1]:
            if letter < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def canonical_rotation(w: Word) -> tuple[Word, int]:
    """Least rotation of a primitive word and the left shift reaching it.

    Returns (y, k) with y = rotate(w, k) the unique Lyndon conjugate of w;
    rotate(y, n - k) restores w exactly.
    """
    ensure_primitive(w)
    k = least_rotation_index(w)
    return rotate(w, k), k
