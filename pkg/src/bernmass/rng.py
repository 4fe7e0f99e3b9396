"""A tiny self-contained PRNG so that seeded runs reproduce bit-for-bit.

The generator is xorshift64* : the 64-bit state is updated by three xor-shifts
(12, 25, 27) and the output is the state times the odd constant
0x2545F4914F6CDD1D, truncated to 64 bits.  Doubles are formed from the top 53
bits of the output, giving uniform values in [0, 1).  Everything is plain
integer arithmetic, so the stream is identical on any platform or language
that follows the same recipe.
"""

from __future__ import annotations

import numpy as np

__all__ = ["Xorshift64Star"]

_MASK64 = (1 << 64) - 1
_MULTIPLIER = 0x2545F4914F6CDD1D
# fallback state for seed 0 (an xorshift state must be nonzero)
_ZERO_SEED_STATE = 0x9E3779B97F4A7C15


class Xorshift64Star:
    """Deterministic 64-bit generator; the full stream is fixed by the seed."""

    def __init__(self, seed: int):
        state = int(seed) & _MASK64
        self._state = state if state != 0 else _ZERO_SEED_STATE

    def next_raw(self) -> int:
        """Advance the state and return the next 64-bit output word."""
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * _MULTIPLIER) & _MASK64

    def random(self) -> float:
        """Next double in [0, 1), built from the top 53 bits of the output."""
        return (self.next_raw() >> 11) * 2.0**-53

    def uniform(self, low: float, high: float, size=None):
        """Uniform draws in [low, high); scalar when size is None."""
        if size is None:
            return low + (high - low) * self.random()
        count = int(np.prod(size))
        flat = np.array([self.random() for _ in range(count)])
        return (low + (high - low) * flat).reshape(size)
