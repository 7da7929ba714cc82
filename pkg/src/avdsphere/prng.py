"""Deterministic 64-bit generator used wherever this package needs randomness.

SplitMix64: the state advances by the golden-ratio increment 0x9E3779B97F4A7C15
and each output is finalized with two xorshift-multiply rounds using the
constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. A given seed therefore
produces one well-defined stream in any language, which keeps seeded weight
files, clip offsets, and fixtures bit-reproducible across runs and platforms.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def uniform01(self) -> float:
        """Double in [0, 1) built from the top 53 bits of one output."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.uniform01()

    def below(self, n: int) -> int:
        """Integer in [0, n). Scaled from uniform01; the end-bias at these
        desk-scale ranges is far below anything observable."""
        if n <= 0:
            raise ValueError("n must be positive")
        return min(int(self.uniform01() * n), n - 1)

    def fill(self, shape, lo: float, hi: float) -> np.ndarray:
        """Array of uniform(lo, hi) draws, consumed in row-major order."""
        flat = np.array([self.uniform(lo, hi) for _ in range(int(np.prod(shape)))])
        return flat.reshape(shape)
