"""Prime-field arithmetic on plain Python ints.

Elements are canonical representatives in [0, p).  The default modulus is
65521, the largest 16-bit prime: coefficients then fit in half a machine
word, so products of two elements stay far below 2**63 and dense int64
linear algebra never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_PRIME = 65521


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit integers."""
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The coefficient field Z/p, p an odd prime."""

    modulus: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.modulus < 3:
            raise ValueError(f"modulus must be >= 3, got {self.modulus}")
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    def normalize(self, a: int) -> int:
        return a % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def inv(self, a: int) -> int:
        if a % self.modulus == 0:
            raise ZeroDivisionError("inverse of 0 in prime field")
        return pow(a, -1, self.modulus)

    def random(self, rng) -> int:
        return rng.randrange(self.modulus)
