"""Seedable 64-bit pseudo-random generator with a fully specified update rule.

This is SplitMix64 (Steele, Lea & Flood, OOPSLA 2014). The state is one
64-bit word advanced by the odd constant 0x9E3779B97F4A7C15 per draw; the
output is that state pushed through two xor-shift-multiply rounds. It is
used instead of the interpreter's ambient generator so that every sampled
object is bit-reproducible from its integer seed, on any platform, forever.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_WORKER_SALT = 0xD6E8FEB86659FD93


class SplitMix64:
    """Deterministic stream of 64-bit words from a single integer seed."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_uint64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from range(bound), modulo bias removed by rejection."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = ((1 << 64) // bound) * bound
        while True:
            z = self.next_uint64()
            if z < limit:
                return z % bound


def derive_worker_seed(seed: int, worker: int) -> int:
    """Independent per-worker seed rule for parallel sampling.

    Worker w draws the (w+1)-th output of a SplitMix64 stream salted with a
    fixed constant. Documented so that parallel runs can merge results
    deterministically; nothing in this package spawns workers itself.
    """
    if worker < 0:
        raise ValueError("worker index must be non-negative")
    stream = SplitMix64(seed ^ _WORKER_SALT)
    value = 0
    for _ in range(worker + 1):
        value = stream.next_uint64()
    return value
