"""Seedable, platform-independent randomness: SplitMix64.

All randomness in this package comes from SplitMix64 (Steele, Lea and
Flood; the finalizer constants are the ones in Vigna's reference C
implementation).  The generator with seed ``s`` produces the stream

    out_i = mix64((s + i * 0x9E3779B97F4A7C15) mod 2**64),  i = 1, 2, ...

where ``mix64`` is the xorshift-multiply finalizer below.  Because the
i-th output depends only on (s, i), the stream can be produced
sequentially or in bulk with identical results, which is what makes
sampling and per-sample seed derivation reproducible across runs,
platforms and thread counts.
"""

from typing import Iterator

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def mix64(x: int) -> int:
    """SplitMix64 finalizer on a 64-bit integer."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * _M1) & MASK64
    x = ((x ^ (x >> 27)) * _M2) & MASK64
    return x ^ (x >> 31)


def splitmix64_stream(seed: int, count: int) -> Iterator[int]:
    """First `count` outputs of SplitMix64 seeded with `seed`."""
    state = seed & MASK64
    for _ in range(count):
        state = (state + GOLDEN) & MASK64
        yield mix64(state)


def splitmix64_bulk(seed: int, count: int) -> np.ndarray:
    """Same stream as splitmix64_stream, produced as a uint64 array."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    x = np.uint64(seed & MASK64) + idx * np.uint64(GOLDEN)
    x ^= x >> np.uint64(30)
    x *= np.uint64(_M1)
    x ^= x >> np.uint64(27)
    x *= np.uint64(_M2)
    x ^= x >> np.uint64(31)
    return x


def derive_seed(master_seed: int, index: int) -> int:
    """Per-sample seed: mix64(master_seed XOR mix64(index + 1)).

    A pure function of (master_seed, index), so samples can be executed
    in any order or concurrently without changing their randomness.
    """
    return mix64((master_seed & MASK64) ^ mix64(index + 1))
