"""SplitMix64, the seedable generator behind every random corpus.

SplitMix64 (Steele, Lea and Flood, 2014) advances a 64-bit state by the odd
constant 0x9E3779B97F4A7C15 and scrambles it with two xor-shift-multiply
rounds.  The algorithm is fixed for the lifetime of this package, so a
(seed, index) pair names the same random ideal on every platform.
"""
from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    @classmethod
    def for_item(cls, seed: int, index: int, stream: int = 0) -> "SplitMix64":
        """Independent generator for item ``index`` of a seeded corpus."""
        key = mix64((seed & MASK64) ^ mix64((index * GOLDEN + stream) & MASK64))
        return cls(key)

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection, free of modulo bias."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def sample(self, population: list, k: int) -> list:
        """k distinct elements, in the order drawn (partial Fisher-Yates)."""
        pool = list(population)
        if k > len(pool):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def chance(self, numerator: int, denominator: int) -> bool:
        return self.below(denominator) < numerator
