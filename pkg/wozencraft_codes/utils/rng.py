"""Deterministic 64-bit pseudo-random generator for ensemble sampling.

xorshift64* (Vigna) seeded through one SplitMix64 step, so any integer seed,
including 0, yields a nonzero state. Constants are the published ones; the
stream is fixed forever so sampled alphas are reproducible from the seed.
"""
from typing import List

MASK64 = (1 << 64) - 1

SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
SPLITMIX_MUL2 = 0x94D049BB133111EB
XORSHIFT_STAR_MUL = 0x2545F4914F6CDD1D


def splitmix64(seed: int) -> int:
    z = (seed + SPLITMIX_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * SPLITMIX_MUL1) & MASK64
    z = ((z ^ (z >> 27)) * SPLITMIX_MUL2) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* stream: shifts (12, 25, 27), multiplier 0x2545F4914F6CDD1D."""

    def __init__(self, seed: int) -> None:
        state = splitmix64(seed & MASK64)
        self.state = state or SPLITMIX_GAMMA

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_STAR_MUL) & MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection of the biased tail."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def symbols(self, q: int, count: int) -> List[int]:
        return [self.below(q) for _ in range(count)]
