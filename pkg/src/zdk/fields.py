"""Coefficient fields: the rationals and prime fields F_p.

Coefficients are stored as plain Python values (Fraction over Q, int in
[0, p) over F_p); a Field object carries the arithmetic.  This keeps hot
loops free of wrapper objects.
"""

from fractions import Fraction

from .errors import NonPrimeField


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    char: int

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))


class RationalField(Field):
    """Q with Fraction coefficients."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """F_p with int coefficients in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeField(f"{p} is not prime")
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, Fraction):
            den = x.denominator % self.char
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.char}")
            return x.numerator * pow(den, -1, self.char) % self.char
        return int(x) % self.char

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return a * b % self.char

    def neg(self, a):
        return -a % self.char

    def inv(self, a):
        return pow(a, -1, self.char)

    def div(self, a, b):
        return a * pow(b, -1, self.char) % self.char

    def __repr__(self):
        return f"GF({self.char})"


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    f = _gf_cache.get(p)
    if f is None:
        f = _gf_cache[p] = PrimeField(p)
    return f
