"""splitmix64: the only randomness source, so every implementation agrees bit for bit."""
from __future__ import annotations

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def integer(self, R: int) -> int:
        """Uniform-ish integer in ``[-R, R]``."""
        return self.next() % (2 * R + 1) - R

    def unit(self) -> float:
        """Real number in ``[-1, 1)``."""
        return self.next() / 2.0**63 - 1.0

    def complex(self) -> complex:
        re = self.unit()
        return complex(re, self.unit())
