"""Cyclic Burrows-Wheeler transform, its permutations, and rank-based inversion.

The transform is a function of the conjugacy class: every rotation of a
primitive word sorts to the same array of conjugates. The canonical (least)
rotation serves as the class representative, and a rotation offset stored
next to the last column makes the transform injective on words rather than
classes.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ContainerFormatError,
    EmptyWordError,
    InvalidBwtError,
    NotLyndonError,
)
from .lyndon import is_lyndon
from .words import Word, canonical_rotation, ensure_primitive, rotate

CONTAINER_MAGIC = b"BWTC1"
_HEADER = struct.Struct("<QQ")

# below this size, sorting suffix slices directly beats the doubling setup
_NAIVE_SUFFIX_CUTOFF = 64


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1, ..., n} in one-line notation: images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise ValueError("permutation must act on at least one point")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError("images must be a bijection on 1..n")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise IndexError(f"point {i} out of range 1..{len(self.images)}")
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def orbit(self, start: int = 1) -> list[int]:
        """The cycle through ``start``: [start, p(start), p(p(start)), ...]."""
        if not 1 <= start <= len(self.images):
            raise IndexError(f"point {start} out of range 1..{len(self.images)}")
        out = [start]
        j = self.images[start - 1]
        while j != start:
            out.append(j)
            j = self.images[j - 1]
        return out

    def is_n_cycle(self) -> bool:
        """True iff the permutation is one cycle through all n points."""
        return len(self.orbit(1)) == len(self.images)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its least point, ordered by least point."""
        seen = [False] * (len(self.images) + 1)
        out = []
        for start in range(1, len(self.images) + 1):
            if seen[start]:
                continue
            orb = self.orbit(start)
            for j in orb:
                seen[j] = True
            out.append(tuple(orb))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths sorted descending: a partition of n."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def one_line(self) -> str:
        """Space-separated 1-indexed images."""
        return " ".join(str(j) for j in self.images)

    def cycle_string(self) -> str:
        """Cycle notation without separators, e.g. '(124)(35)'."""
        return "".join(
            "(" + "".join(str(j) for j in cycle) + ")" for cycle in self.cycles()
        )

    @classmethod
    def from_cycle_word(cls, values: Sequence[int]) -> "Permutation":
        """Interpret a sequence of n distinct values covering 1..n as one n-cycle."""
        n = len(values)
        images = [0] * n
        for idx, v in enumerate(values):
            images[v - 1] = values[(idx + 1) % n]
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Build from disjoint cycles; points not mentioned are fixed."""
        images = list(range(1, n + 1))
        for cycle in cycles:
            for idx, v in enumerate(cycle):
                images[v - 1] = cycle[(idx + 1) % len(cycle)]
        return cls(tuple(images))


@dataclass(frozen=True)
class BwtContainer:
    """Transform output: the last column plus the rotation offset of the source.

    The last column alone pins down only the conjugacy class; the offset
    records which rotation the caller supplied, so transform and inverse
    compose to the identity on words.
    """

    last_column: Word
    rotation_offset: int

    def __post_init__(self) -> None:
        if not self.last_column:
            raise ValueError("last column must be nonempty")
        if not 0 <= self.rotation_offset < len(self.last_column):
            raise ValueError("rotation offset out of range")

    def to_bytes(self) -> bytes:
        """Magic, length and offset as little-endian u64, then the raw column."""
        return (
            CONTAINER_MAGIC
            + _HEADER.pack(len(self.last_column), self.rotation_offset)
            + self.last_column
        )

    @classmethod
    def from_bytes(cls, data: bytes) -> "BwtContainer":
        if data[: len(CONTAINER_MAGIC)] != CONTAINER_MAGIC:
            raise ContainerFormatError("bad magic: not a transform container")
        if len(data) < len(CONTAINER_MAGIC) + _HEADER.size:
            raise ContainerFormatError("truncated container header")
        n, offset = _HEADER.unpack_from(data, len(CONTAINER_MAGIC))
        body = data[len(CONTAINER_MAGIC) + _HEADER.size:]
        if len(body) != n:
            raise ContainerFormatError(
                f"container declares {n} payload bytes, found {len(body)}"
            )
        if n == 0:
            raise ContainerFormatError("container holds an empty word")
        if offset >= n:
            raise ContainerFormatError("rotation offset out of range")
        return cls(bytes(body), offset)


def suffix_array(w: Word) -> list[int]:
    """0-based starts of the suffixes of ``w`` in increasing lexicographic order.

    Prefix doubling over integer rank arrays: O(n log n) worst case, exiting
    early once all ranks are distinct. Tiny inputs sort suffix slices directly.
    """
    return _suffix_order(w).tolist()


def _suffix_order(w: Word) -> np.ndarray:
    n = len(w)
    if n <= _NAIVE_SUFFIX_CUTOFF:
        return np.array(sorted(range(n), key=lambda i: w[i:]), dtype=np.int64)
    # compress byte values to 0..m-1 so pair keys fit radix n + 1
    _, rank = np.unique(np.frombuffer(w, dtype=np.uint8), return_inverse=True)
    rank = rank.astype(np.int64)
    step = 1
    while True:
        # key for suffix i: (rank[i], rank[i + step]) with missing halves lowest
        key = rank * (n + 1) + 1
        key[: n - step] += rank[step:]
        order = np.argsort(key, kind="stable")
        ordered = key[order]
        rank = np.empty(n, dtype=np.int64)
        rank[order] = np.concatenate(
            ([0], np.cumsum(ordered[1:] != ordered[:-1]))
        )
        if rank[order[-1]] == n - 1 or step >= n:
            return order
        step *= 2


def sort_conjugates_naive(w: Word) -> Permutation:
    """Rank permutation of the rotations of ``w``, by sorting the rotations themselves.

    Quadratic-space reference implementation, kept as the oracle for the
    suffix-array route and as a dependency-free fallback for small inputs.
    """
    ensure_primitive(w)
    order = sorted(range(len(w)), key=lambda k: rotate(w, k))
    images = [0] * len(w)
    for r, start in enumerate(order, start=1):
        images[start] = r
    return Permutation(tuple(images))


def sort_conjugates_fast(w: Word) -> Permutation:
    """Rank permutation of the rotations of a Lyndon word, via its suffix array.

    For a Lyndon word the rotations compare exactly like the suffixes starting
    at the same positions, so one suffix sort orders all rotations.
    """
    if not w:
        raise EmptyWordError("cannot sort rotations of the empty word")
    if not is_lyndon(w):
        raise NotLyndonError("sort_conjugates_fast requires a Lyndon word")
    order = _suffix_order(w)
    images = np.empty(len(w), dtype=np.int64)
    images[order] = np.arange(1, len(w) + 1)
    return Permutation(tuple(images.tolist()))


def sigma(w: Word) -> Permutation:
    """Sorted rank of each rotation of the canonical representative of ``w``.

    sigma(i) is the 1-based rank, among all sorted rotations, of the rotation
    starting at position i of the Lyndon conjugate of ``w``. Computed on the
    canonical rotation, so every rotation of a word shares one sigma; letter i
    of the representative equals letter sigma(i) of the sorted column.
    """
    ensure_primitive(w)
    lyndon_rep, _ = canonical_rotation(w)
    return sort_conjugates_fast(lyndon_rep)


def pi_of(w: Word) -> Permutation:
    """Successor permutation of the sorted-rotation array: an n-cycle.

    Reading sigma in one-line notation as a single cycle. It maps the rank of
    the rotation starting at position i to the rank of the rotation starting
    at i + 1, hence carries every column of the sorted array to the next one;
    it is invariant under rotating the input.
    """
    return Permutation.from_cycle_word(sigma(w).images)


def bwt_transform(w: Word) -> BwtContainer:
    """Last letters of the sorted rotations of ``w``, plus the offset restoring it.

    Every rotation of ``w`` yields the same last column, differing only in
    rotation_offset. Non-primitive words are rejected: their rotation array
    has ties, which leaves the column ill-defined.
    """
    ensure_primitive(w)
    lyndon_rep, offset = canonical_rotation(w)
    n = len(lyndon_rep)
    order = _suffix_order(lyndon_rep)
    column = np.frombuffer(lyndon_rep, dtype=np.uint8)[(order - 1) % n]
    return BwtContainer(column.tobytes(), offset)


def permutation_from_bwt(y: Word) -> Permutation:
    """Rebuild the rotation-successor permutation from a last column alone.

    Position i of the sorted column pairs with the occurrence of the same
    letter at equal occurrence rank in ``y``. Precomputing each letter's
    first slot in the sorted column and sweeping ``y`` once with per-letter
    counters gives the whole map in linear time.
    """
    if not y:
        raise EmptyWordError("cannot build a permutation from the empty word")
    counts = [0] * 256
    for b in y:
        counts[b] += 1
    slots = [0] * 256
    total = 0
    for letter in range(256):
        slots[letter] = total
        total += counts[letter]
    images = [0] * len(y)
    for j, b in enumerate(y, start=1):
        images[slots[b]] = j
        slots[b] += 1
    return Permutation(tuple(images))


def word_from(z: Word, pi: Permutation) -> Word:
    """Read the letters of ``z`` along the pi-orbit of 1.

    ``z`` should be nondecreasing (a sorted column); the result is then the
    canonical rotation of the word whose transform produced (z, pi). A pi
    that is not a single n-cycle signals input that is not the transform of
    any primitive word.
    """
    if pi.size != len(z):
        raise ValueError(
            f"length mismatch: {len(z)} letters vs permutation on {pi.size} points"
        )
    orbit = pi.orbit(1)
    if len(orbit) != len(z):
        raise InvalidBwtError(
            "permutation is not a single n-cycle: not a valid cyclic transform"
        )
    return bytes(z[j - 1] for j in orbit)


def invert_bwt(container: BwtContainer) -> Word:
    """Exact inverse of bwt_transform: sort, rebuild the cycle, read, unrotate."""
    y = container.last_column
    z = bytes(sorted(y))
    pi = permutation_from_bwt(y)
    lyndon_rep = word_from(z, pi)
    n = len(y)
    return rotate(lyndon_rep, (n - container.rotation_offset) % n)
