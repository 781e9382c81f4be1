"""Seeded random streams with independent substreams.

Each stream is a PCG64 generator (period 2**128) keyed by
``SeedSequence(seed, spawn_key=(stream_id,))``, so any (seed, stream_id)
pair can be rebuilt on any worker without coordination.
"""
import numpy as np

_TWO53 = 2.0 ** 53


class RandomStream:
    def __init__(self, seed: int, stream_id: int = 0):
        if seed < 0 or seed >= 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        if stream_id < 0:
            raise ValueError(f"stream_id must be >= 0, got {stream_id}")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream_id,))
        self._gen = np.random.Generator(np.random.PCG64(ss))

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, stream_id={self.stream_id})"

    def uniform(self, n):
        """Uniforms on [0, 1)."""
        return self._gen.random(n)

    def uniform_open(self, n):
        """Uniforms on the open interval (0, 1): midpoints of a 2**-53 lattice."""
        k = self._gen.integers(0, 2 ** 53, size=n, dtype=np.int64)
        return (k.astype(np.float64) + 0.5) / _TWO53

    def exponential(self, n):
        """Exp(1) by inversion; always finite and > 0."""
        return -np.log(self.uniform_open(n))

    def normal(self, n):
        return self._gen.standard_normal(n)
