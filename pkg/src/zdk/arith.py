"""Integer arithmetic for the modular engine: CRT, fault-tolerant rational
reconstruction, integer radicals, and the seeded prime stream.
"""

import random
from dataclasses import dataclass, field
from math import gcd, isqrt

from .errors import NonCoprimeModuli
from .fields import is_prime

# Bits of slack demanded by the reconstruction reliability heuristic.
RELIABILITY_SLACK_BITS = 20


def crt_combine(r1: int, m1: int, r2: int, m2: int) -> int:
    """Residue mod m1*m2 congruent to r1 mod m1 and r2 mod m2."""
    if gcd(m1, m2) != 1:
        raise NonCoprimeModuli(f"gcd({m1}, {m2}) != 1")
    # r = r1 + m1 * ((r2 - r1) / m1 mod m2)
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return (r1 + m1 * t) % (m1 * m2)


def rat_reconstruct(r: int, m: int) -> tuple[int, int, bool]:
    """Recover a rational a/b with a/b = r (mod m), tolerating corruption.

    Walks the extended Euclidean sequence of (m, r) and keeps the pair
    divided through by the largest quotient (a large quotient marks a
    sudden drop in remainder size, the signature of a correct candidate).
    The candidate is reliable when that quotient clears the slack
    threshold min(2**RELIABILITY_SLACK_BITS, sqrt(m)); a common factor
    between numerator and denominator (the footprint of corrupted
    residues) is divided out.

    Returns (num, den, reliable) with den > 0; (r, 1, False) when no
    quotient clears the threshold.
    """
    if m <= 1:
        return (r, 1, False)
    r %= m
    if r == 0:
        return (0, 1, True)
    threshold = min(1 << RELIABILITY_SLACK_BITS, isqrt(m))
    r0, r1 = m, r
    t0, t1 = 0, 1
    best_q = 0
    num, den = r, 1
    while r1 != 0:
        q = r0 // r1
        if q > best_q:
            best_q = q
            num, den = r1, t1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if best_q < threshold:
        return (r, 1, False)
    if den < 0:
        num, den = -num, -den
    if den == 0:
        return (r, 1, False)
    g = gcd(abs(num), den)
    if g > 1:
        num //= g
        den //= g
    if gcd(den, m) != 1:
        return (r, 1, False)
    return (num, den, True)


def int_radical(n: int) -> int:
    """Product of the distinct primes dividing n (n >= 1), by trial division."""
    if n < 1:
        raise ValueError("int_radical requires n >= 1")
    rad = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            rad *= d
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        rad *= n
    return rad


@dataclass
class CrtAccumulator:
    """Coefficient residues of one degree class, with combined modulus."""

    degree: int
    residues: list[int] = field(default_factory=list)
    modulus: int = 1
    primes: list[int] = field(default_factory=list)

    def add(self, residues: list[int], p: int) -> None:
        if len(residues) != self.degree + 1:
            raise ValueError("residue vector length mismatch")
        if self.modulus == 1:
            self.residues = list(residues)
        else:
            self.residues = [
                crt_combine(a, self.modulus, b, p)
                for a, b in zip(self.residues, residues)
            ]
        self.modulus *= p
        self.primes.append(p)

    def reconstruct(self) -> tuple[list[tuple[int, int]], bool]:
        """Per-coefficient rational reconstruction; ok iff all reliable."""
        out = []
        ok = True
        for r in self.residues:
            num, den, reliable = rat_reconstruct(r, self.modulus)
            ok = ok and reliable
            out.append((num, den))
        return out, ok


# Modular primes are word-sized: large enough that bad primes are rare,
# small enough for fast arithmetic.
PRIME_LO = 1 << 29
PRIME_HI = 1 << 30


def prime_stream(seed: int, lo: int = PRIME_LO, hi: int = PRIME_HI):
    """Deterministic stream of distinct pseudo-random primes in [lo, hi)."""
    rng = random.Random(seed)
    seen = set()
    while True:
        n = rng.randrange(lo | 1, hi, 2)
        if n in seen:
            continue
        seen.add(n)
        if is_prime(n):
            yield n
