"""Small helpers for vertex sets stored as Python int bitmasks.

Bit k of a mask corresponds to internal vertex k (0-indexed).
"""

from typing import Iterable, Iterator


def mask_from_indices(indices: Iterable[int]) -> int:
    m = 0
    for v in indices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def indices_from_mask(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    """Position of the lowest set bit (mask must be nonzero)."""
    return (mask & -mask).bit_length() - 1
