"""
Seeded random streams.

Each stream is a Philox (counter-based) generator keyed by a SeedSequence, so
streams derived from the same seed with different stream ids never overlap.
Optimizers only draw through the methods below, which keeps them testable with
a pinned stream.
"""

from typing import Optional

import numpy as np


class RngStream:
    def __init__(self, seed: int, stream: int = 0):
        if not 0 <= seed < 2**64:
            raise ValueError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self.stream = int(stream)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream,))
        self._generator = np.random.Generator(np.random.Philox(sequence))

    def derive(self, stream: int) -> "RngStream":
        """Independent stream for the same seed (e.g. objective noise)."""
        return RngStream(self.seed, stream)

    def next_uniform(self) -> float:
        return float(self._generator.random())

    def random(self, size: Optional[int] = None):
        """Uniform draws in [0, 1)."""
        if size is None:
            return self.next_uniform()
        return self._generator.random(size)

    def uniform(self, low, high, size: Optional[int] = None):
        return self._generator.uniform(low, high, size)

    def integers(self, low: int, high: int) -> int:
        """Uniform integer in [low, high)."""
        return int(self._generator.integers(low, high))

    def sample_without_replacement(self, n: int, k: int) -> np.ndarray:
        """k distinct indices out of range(n), in random order."""
        return self._generator.permutation(n)[:k]
