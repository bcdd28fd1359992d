"""Demonstration pipeline: transform, then move-to-front, then run-length coding.

No entropy coder; the point is that the transform turns repetitive input into
long runs that the two simple recodings capture. Every stage has an exact
inverse and the container format is bit-exact.
"""

from __future__ import annotations

import struct
from typing import Iterable, Sequence

from .bwt import BwtContainer, bwt_transform, invert_bwt
from .errors import ContainerFormatError
from .words import Word

PIPELINE_MAGIC = b"BWGR1"
_HEADER = struct.Struct("<QQ")

MtfStream = list[int]
RleStream = list[tuple[int, int]]


def mtf_encode(data: bytes) -> MtfStream:
    """Move-to-front indices of ``data`` against a recency table starting as 0..255."""
    table = list(range(256))
    out = []
    for b in data:
        idx = table.index(b)
        out.append(idx)
        if idx:
            del table[idx]
            table.insert(0, b)
    return out


def mtf_decode(indices: Iterable[int]) -> bytes:
    """Exact inverse of mtf_encode."""
    table = list(range(256))
    out = bytearray()
    for idx in indices:
        if not 0 <= idx <= 255:
            raise ValueError(f"move-to-front index {idx} out of range 0..255")
        b = table.pop(idx)
        out.append(b)
        table.insert(0, b)
    return bytes(out)


def rle_encode(data: Sequence[int]) -> RleStream:
    """Maximal runs of ``data`` as (symbol, count) pairs; adjacent symbols differ."""
    runs: RleStream = []
    for b in data:
        if runs and runs[-1][0] == b:
            runs[-1] = (b, runs[-1][1] + 1)
        else:
            runs.append((b, 1))
    return runs


def rle_decode(runs: Iterable[tuple[int, int]]) -> bytes:
    """Expand (symbol, count) runs back into bytes; counts must be positive."""
    out = bytearray()
    for symbol, count in runs:
        if count < 1:
            raise ValueError("run count must be at least 1")
        if not 0 <= symbol <= 255:
            raise ValueError(f"run symbol {symbol} out of range 0..255")
        out.extend(bytes([symbol]) * count)
    return bytes(out)


def _encode_uvarint(value: int) -> bytes:
    out = bytearray()
    while True:
        low = value & 0x7F
        value >>= 7
        if value:
            out.append(low | 0x80)
        else:
            out.append(low)
            return bytes(out)


def _read_uvarint(data: bytes, pos: int) -> tuple[int, int]:
    value = 0
    shift = 0
    while True:
        if pos >= len(data):
            raise ContainerFormatError("truncated varint")
        b = data[pos]
        pos += 1
        value |= (b & 0x7F) << shift
        if not b & 0x80:
            return value, pos
        shift += 7
        if shift > 63:
            raise ContainerFormatError("varint longer than 64 bits")


def compress(w: Word) -> bytes:
    """Serialize the transform of a primitive word as runs of its move-to-front stream.

    Layout: magic, length and rotation offset as little-endian u64, then one
    (symbol byte, count varint) pair per run of the move-to-front indices of
    the last column.
    """
    container = bwt_transform(w)
    payload = bytearray()
    for symbol, count in rle_encode(mtf_encode(container.last_column)):
        payload.append(symbol)
        payload.extend(_encode_uvarint(count))
    header = _HEADER.pack(len(container.last_column), container.rotation_offset)
    return PIPELINE_MAGIC + header + bytes(payload)


def decompress(data: bytes) -> Word:
    """Exact inverse of compress."""
    if data[: len(PIPELINE_MAGIC)] != PIPELINE_MAGIC:
        raise ContainerFormatError("bad magic: not a compressed container")
    if len(data) < len(PIPELINE_MAGIC) + _HEADER.size:
        raise ContainerFormatError("truncated container header")
    n, offset = _HEADER.unpack_from(data, len(PIPELINE_MAGIC))
    if n == 0:
        raise ContainerFormatError("container holds an empty word")
    if offset >= n:
        raise ContainerFormatError("rotation offset out of range")
    pos = len(PIPELINE_MAGIC) + _HEADER.size
    runs: RleStream = []
    total = 0
    while total < n:
        if pos >= len(data):
            raise ContainerFormatError("truncated run payload")
        symbol = data[pos]
        count, pos = _read_uvarint(data, pos + 1)
        if count < 1:
            raise ContainerFormatError("zero-length run")
        runs.append((symbol, count))
        total += count
    if total != n:
        raise ContainerFormatError("runs overshoot the declared length")
    if pos != len(data):
        raise ContainerFormatError("trailing bytes after the run payload")
    column = mtf_decode(rle_decode(runs))
    return invert_bwt(BwtContainer(column, offset))
