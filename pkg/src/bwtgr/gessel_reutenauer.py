"""Descent sets, the letter-boundary bound, and the word/permutation correspondence.

A word maps to a permutation whose cycles trace its Lyndon factors; for a
word that is itself Lyndon this is exactly the transform's successor
permutation. Descents of that permutation can only sit at boundaries between
letter blocks of the sorted column, and on small instances the map is an
exact bijection between primitive conjugacy classes and n-cycles obeying the
boundary bound. The checkers here enumerate both sides exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .bwt import Permutation, bwt_transform, permutation_from_bwt, pi_of
from .errors import EmptyWordError, LimitExceededError
from .lyndon import lyndon_factorize, lyndon_words
from .words import ParikhVector, Word, ensure_primitive, parikh

DEFAULT_ENUMERATION_LIMIT = 10

# hard cap on the total candidate words scanned by the table enumerator
_TABLE_WORD_CAP = 1 << 20


def descents(pi: Permutation) -> frozenset[int]:
    """Positions i in 1..n-1 where the one-line image drops: pi(i) > pi(i+1)."""
    im = pi.images
    return frozenset(i for i in range(1, len(im)) if im[i - 1] > im[i])


def rho(v: ParikhVector | Sequence[int]) -> frozenset[int]:
    """Proper partial sums of a positive count vector: the letter-block boundaries.

    The total is excluded, so a vector with k letters yields k - 1 boundaries,
    all strictly below the word length.
    """
    counts = v.multiplicities if isinstance(v, ParikhVector) else tuple(v)
    if any(c <= 0 for c in counts):
        raise ValueError("count vector must be positive")
    return frozenset(itertools.accumulate(counts[:-1]))


def descent_bound_check(w: Word) -> bool:
    """Whether the descents of the word's n-cycle stay inside its block boundaries.

    Holds for every primitive word: equal letters of the sorted column keep
    their order under the successor permutation, so a descent forces a letter
    change.
    """
    ensure_primitive(w)
    return descents(pi_of(w)) <= rho(parikh(w))


def gr_map(w: Word) -> Permutation:
    """Permutation whose cycles trace the Lyndon factors of ``w``.

    Each position of ``w`` is ranked by its periodic extension: the factor it
    sits in, read cyclically from that position and repeated forever. Within
    a factor, the cycle sends each position's rank to the next position's
    rank (wrapping at the factor end). Positions with equal extensions, which
    occur only when equal factors repeat, are ranked in position order; this
    keeps the cycle type equal to the factor-length partition. For a Lyndon
    word the result coincides with pi_of.
    """
    if not w:
        raise EmptyWordError("cannot map the empty word")
    factors = lyndon_factorize(w).factors
    longest = max(len(f) for f in factors)
    keys: list[Word] = []
    spans: list[range] = []
    position = 0
    for f in factors:
        m = len(f)
        # two distinct periodic words with periods p and q differ within
        # p + q letters, so m + longest letters always separate them
        reps = (m + longest + m - 1) // m
        for o in range(m):
            extension = (f[o:] + f[:o]) * reps
            keys.append(extension[: m + longest])
        spans.append(range(position, position + m))
        position += m
    order = sorted(range(len(w)), key=keys.__getitem__)  # stable: ties by position
    label = [0] * len(w)
    for r, p in enumerate(order, start=1):
        label[p] = r
    images = [0] * len(w)
    for span in spans:
        positions = list(span)
        for idx, p in enumerate(positions):
            successor = positions[(idx + 1) % len(positions)]
            images[label[p] - 1] = label[successor]
    return Permutation(tuple(images))


def is_co_lyndon(y: Word) -> bool:
    """True iff the permutation rebuilt from ``y`` as a last column is one n-cycle.

    Exactly the words that arise as transforms of Lyndon words.
    """
    if not y:
        raise EmptyWordError("the empty word is not co-Lyndon")
    return permutation_from_bwt(y).is_n_cycle()


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of checking the class/permutation correspondence for one count vector."""

    parikh_vector: ParikhVector
    class_count: int
    perm_count: int
    injective: bool
    surjective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


class TableRow(NamedTuple):
    lyndon: Word
    co_lyndon: Word
    cycle: Permutation


@lru_cache(maxsize=3)
def _cycles_with_descent_sets(
    n: int,
) -> tuple[tuple[tuple[int, ...], frozenset[int]], ...]:
    """Every n-cycle on {1..n} as a one-line tuple, paired with its descent set."""
    out = []
    for rest in itertools.permutations(range(2, n + 1)):
        cycle = (1, *rest)
        images = [0] * n
        for idx in range(n):
            images[cycle[idx] - 1] = cycle[(idx + 1) % n]
        im = tuple(images)
        out.append((im, frozenset(i for i in range(1, n) if im[i - 1] > im[i])))
    return tuple(out)


def _lyndon_classes(v: ParikhVector) -> list[Word]:
    """Lyndon representatives of the primitive conjugacy classes with counts ``v``."""
    target = v.counts
    return [
        u for u in lyndon_words(v.total, bytes(v.letters)) if parikh(u).counts == target
    ]


def verify_theorem1(
    v: ParikhVector, *, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> BijectionReport:
    """Exhaustively check one count vector's class/permutation correspondence.

    Enumerates the Lyndon representatives of all primitive conjugacy classes
    with counts ``v``, maps each through pi_of, and compares the image set
    against all n-cycles whose descents fit inside rho(v). Guarded by
    ``limit`` because the cycle side grows factorially with n.
    """
    n = v.total
    if n > limit:
        raise LimitExceededError(f"n={n} exceeds the enumeration limit {limit}")
    boundary = rho(v)
    images = [pi_of(u).images for u in _lyndon_classes(v)]
    image_set = set(images)
    target = {im for im, des in _cycles_with_descent_sets(n) if des <= boundary}
    return BijectionReport(
        parikh_vector=v,
        class_count=len(images),
        perm_count=len(target),
        injective=len(image_set) == len(images),
        surjective=image_set == target,
    )


def binary_special_case_check(
    n: int, *, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> bool:
    """Check the two-letter case for one length.

    The length-n binary Lyndon words must map one-to-one onto the n-cycles
    with exactly one descent.
    """
    if n < 2:
        raise ValueError("the two-letter case needs n >= 2")
    if n > limit:
        raise LimitExceededError(f"n={n} exceeds the enumeration limit {limit}")
    images = [pi_of(u).images for u in lyndon_words(n, b"ab")]
    target = {im for im, des in _cycles_with_descent_sets(n) if len(des) == 1}
    return len(set(images)) == len(images) and set(images) == target


def enumerate_lyndon_colyndon(
    n: int, alphabet: bytes, *, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> list[TableRow]:
    """One row per length-n Lyndon word over ``alphabet``, in lexicographic order.

    Each row carries the word, its transform's last column, and the n-cycle
    of the transform.
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    letters = sorted(set(alphabet))
    if not letters:
        raise ValueError("alphabet must be nonempty")
    if n > limit or len(letters) ** n > _TABLE_WORD_CAP:
        raise LimitExceededError(
            f"{len(letters)} letters at length {n} exceed the enumeration guard"
        )
    rows = []
    for u in lyndon_words(n, bytes(letters)):
        container = bwt_transform(u)
        rows.append(TableRow(u, container.last_column, pi_of(u)))
    return rows
