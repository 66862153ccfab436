"""Bitset helpers. Element sets are Python ints, bit i = element index i."""

from __future__ import annotations

import numpy as np


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int):
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_bool(mask: int, n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def from_bool(flags: np.ndarray) -> int:
    packed = np.packbits(flags.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def compress(mask: int, keep: np.ndarray) -> int:
    """Restrict mask to the True positions of `keep`, renumbered 0..k-1."""
    return from_bool(to_bool(mask, keep.size)[keep])
