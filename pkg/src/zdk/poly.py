"""Power products, term orderings, sparse multivariate and dense univariate
polynomials over Q and F_p.

Multivariate polynomials are sparse maps from exponent tuples to nonzero
coefficients; univariate polynomials are dense coefficient vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import numpy as np

from .errors import (
    ArityMismatch,
    ConstantPolynomial,
    UglyPrime,
    ZeroPolynomial,
)
from .fields import GF, QQ, Field, PrimeField


# ---------------------------------------------------------------------------
# Term orderings
# ---------------------------------------------------------------------------

def _drl_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class TermOrdering:
    """Total multiplicative order on power products, via a sort key.

    key(a) < key(b) iff a is sigma-smaller than b.
    """

    def key(self, pp):
        raise NotImplementedError


@dataclass(frozen=True)
class Lex(TermOrdering):
    def key(self, pp):
        return pp

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class DegLex(TermOrdering):
    def key(self, pp):
        return (sum(pp), pp)

    def __str__(self):
        return "deglex"


@dataclass(frozen=True)
class DegRevLex(TermOrdering):
    def key(self, pp):
        return _drl_key(pp)

    def __str__(self):
        return "degrevlex"


@dataclass(frozen=True)
class BlockOrder(TermOrdering):
    """Elimination order: front variables (by index) compared degrevlex
    first, remaining variables degrevlex as tie-break."""

    front: tuple[int, ...]

    def key(self, pp):
        fset = set(self.front)
        f = tuple(pp[i] for i in self.front)
        b = tuple(e for i, e in enumerate(pp) if i not in fset)
        return (_drl_key(f), _drl_key(b))

    def __str__(self):
        return f"block(front={self.front})"


LEX = Lex()
DEGLEX = DegLex()
DEGREVLEX = DegRevLex()


def order_compare(ordering: TermOrdering, a, b) -> int:
    """-1, 0 or 1 as a <sigma b, a = b, a >sigma b."""
    if len(a) != len(b):
        raise ArityMismatch(f"arity {len(a)} vs {len(b)}")
    ka, kb = ordering.key(a), ordering.key(b)
    return (ka > kb) - (ka < kb)


def pp_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def pp_divides(a, b):
    """Does a divide b?"""
    return all(x <= y for x, y in zip(a, b))


def pp_div(a, b):
    """a / b (assumes divisibility)."""
    return tuple(x - y for x, y in zip(a, b))


def pp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Ring descriptor and sparse multivariate polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    field: Field
    names: tuple[str, ...]
    order: TermOrdering = DEGREVLEX

    @property
    def nvars(self):
        return len(self.names)

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return MultiPoly(self, {(0,) * self.nvars: self.field.one})

    def const(self, c):
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero()
        return MultiPoly(self, {(0,) * self.nvars: c})

    def var(self, i):
        pp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return MultiPoly(self, {pp: self.field.one})

    def vars(self):
        return [self.var(i) for i in range(self.nvars)]

    def from_terms(self, terms):
        d = {}
        f = self.field
        for pp, c in terms:
            c = f.coerce(c)
            acc = f.add(d.get(pp, f.zero), c)
            if acc == f.zero:
                d.pop(pp, None)
            else:
                d[pp] = acc
        return MultiPoly(self, d)


class MultiPoly:
    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lt = None

    # -- basic structure ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(pp) for pp in self.terms)

    def leading_pp(self):
        if self._lt is None:
            if not self.terms:
                raise ZeroPolynomial("zero polynomial has no leading term")
            self._lt = max(self.terms, key=self.ring.order.key)
        return self._lt

    def leading_coeff(self):
        return self.terms[self.leading_pp()]

    def sorted_terms(self, reverse=True):
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]),
                      reverse=reverse)

    def constant_value(self):
        """Coefficient of the constant monomial."""
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def is_constant(self):
        return all(sum(pp) == 0 for pp in self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        f = self.ring.field
        d = dict(self.terms)
        for pp, c in other.terms.items():
            acc = f.add(d.get(pp, f.zero), c)
            if acc == f.zero:
                d.pop(pp, None)
            else:
                d[pp] = acc
        return MultiPoly(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return MultiPoly(self.ring, {pp: f.neg(c) for pp, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        f = self.ring.field
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        d = {}
        if f.char:
            p = f.char
            for pa, ca in a.terms.items():
                for pb, cb in b.terms.items():
                    pp = pp_mul(pa, pb)
                    d[pp] = (d.get(pp, 0) + ca * cb) % p
        else:
            for pa, ca in a.terms.items():
                for pb, cb in b.terms.items():
                    pp = pp_mul(pa, pb)
                    d[pp] = d.get(pp, f.zero) + ca * cb
        return MultiPoly(self.ring, {pp: c for pp, c in d.items() if c != f.zero})

    __rmul__ = __mul__

    def scale(self, c):
        f = self.ring.field
        c = f.coerce(c)
        if c == f.zero:
            return self.ring.zero()
        return MultiPoly(self.ring, {pp: f.mul(v, c) for pp, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coeff()))

    def mul_pp(self, pp):
        """Multiply by a power product."""
        return MultiPoly(self.ring, {pp_mul(q, pp): c for q, c in self.terms.items()})

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for pp, c in self.sorted_terms():
            parts.append(_format_term(self.ring.names, pp, c, first=not parts))
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


def _coeff_str(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _format_term(names, pp, c, first):
    neg = (isinstance(c, Fraction) and c < 0) or (isinstance(c, int) and c < 0)
    mag = -c if neg else c
    factors = []
    for name, e in zip(names, pp):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    body = "*".join(factors)
    cs = _coeff_str(mag)
    if body:
        if cs == "1":
            text = body
        else:
            text = f"{cs}{body.split('*')[0]}"
            rest = body.split("*")[1:]
            if rest:
                text += "*" + "*".join(rest)
    else:
        text = cs
    if first:
        return ("-" if neg else "") + text
    return (" - " if neg else " + ") + text


def poly_map_field(f: MultiPoly, ring: Ring) -> MultiPoly:
    """Coefficientwise coercion into another ring with the same variables."""
    fld = ring.field
    d = {}
    for pp, c in f.terms.items():
        v = fld.coerce(c)
        if v != fld.zero:
            d[pp] = v
    return MultiPoly(ring, d)


# ---------------------------------------------------------------------------
# Denominators and reduction mod p
# ---------------------------------------------------------------------------

def den_poly(f: MultiPoly) -> int:
    """LCM of coefficient denominators of a polynomial over Q; 1 for f = 0."""
    if f.ring.field.char != 0:
        raise ValueError("den_poly requires a polynomial over Q")
    if not f.terms:
        return 1
    return reduce(lcm, (c.denominator for c in f.terms.values()), 1)


def map_mod_p(f: MultiPoly, p: int) -> MultiPoly:
    """Coefficientwise image of f over F_p; UglyPrime if p divides den(f)."""
    if den_poly(f) % p == 0:
        raise UglyPrime(f"{p} divides den(f) = {den_poly(f)}")
    ring = Ring(GF(p), f.ring.names, f.ring.order)
    return poly_map_field(f, ring)


def subst_univariate(mu: "UniPoly", f: MultiPoly) -> MultiPoly:
    """mu(f), computed exactly by Horner's rule (no reduction)."""
    ring = f.ring
    acc = ring.zero()
    for c in reversed(mu.coeffs):
        acc = acc * f + ring.const(c)
    return acc


# ---------------------------------------------------------------------------
# Dense univariate polynomials
# ---------------------------------------------------------------------------

# numpy convolution pays off past this operand size (prime fields only)
_NUMPY_MUL_MIN = 48


class UniPoly:
    """Dense univariate polynomial; coeffs[i] is the degree-i coefficient.

    Zero polynomial has an empty coefficient list.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        c = [field.coerce(x) for x in coeffs]
        while c and c[-1] == field.zero:
            c.pop()
        self.field = field
        self.coeffs = c

    @classmethod
    def _raw(cls, field, coeffs):
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, field):
        return cls._raw(field, [])

    @classmethod
    def one(cls, field):
        return cls._raw(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls._raw(field, [field.zero, field.one])

    @classmethod
    def x_pow(cls, field, n):
        return cls._raw(field, [field.zero] * n + [field.one])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, tuple(self.coeffs)))

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return UniPoly(f, out)

    def __neg__(self):
        f = self.field
        return UniPoly._raw(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(f)
        p = f.char
        if p and min(len(a), len(b)) >= _NUMPY_MUL_MIN and p < (1 << 30):
            return UniPoly._raw(f, _fp_convolve(a, b, p))
        out = [f.zero] * (len(a) + len(b) - 1)
        if p:
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] = (out[i + j] + ca * cb) % p
        else:
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] = out[i + j] + ca * cb
        return UniPoly(f, out)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return UniPoly.zero(f)
        return UniPoly._raw(f, [f.mul(v, c) for v in self.coeffs])

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc()))

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("univariate division by zero")
        f = self.field
        rem = list(self.coeffs)
        d = other.degree()
        lc_inv = f.inv(other.lc())
        if len(rem) <= d:
            return UniPoly.zero(f), UniPoly(f, rem)
        p = f.char
        if p and d >= _NUMPY_MUL_MIN and p < (1 << 30):
            return self._fp_divmod(other, lc_inv)
        quo = [f.zero] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == f.zero:
                continue
            q = f.mul(c, lc_inv)
            quo[i - d] = q
            if p:
                for j, oc in enumerate(other.coeffs):
                    rem[i - d + j] = (rem[i - d + j] - q * oc) % p
            else:
                for j, oc in enumerate(other.coeffs):
                    rem[i - d + j] = rem[i - d + j] - q * oc
        return UniPoly(f, quo), UniPoly(f, rem[:d])

    def _fp_divmod(self, other, lc_inv):
        """Vectorized long division mod p (divisor degree >= cutoff)."""
        f = self.field
        p = f.char
        rem = np.array(self.coeffs, dtype=np.int64)
        b = np.array(other.coeffs[:-1], dtype=np.int64)
        d = other.degree()
        quo = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = int(rem[i])
            if c:
                q = c * lc_inv % p
                quo[i - d] = q
                rem[i - d:i] = (rem[i - d:i] - q * b) % p
                rem[i] = 0
        return UniPoly(f, quo), UniPoly(f, [int(x) for x in rem[:d]])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def derivative(self):
        f = self.field
        if len(self.coeffs) <= 1:
            return UniPoly.zero(f)
        out = [f.mul(c, f.coerce(i)) for i, c in enumerate(self.coeffs) if i > 0]
        return UniPoly(f, out)

    def pow_mod(self, n, modulus):
        result = UniPoly.one(self.field) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            n >>= 1
            if n:
                base = (base * base) % modulus
        return result

    def __pow__(self, n):
        result = UniPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def evaluate(self, x):
        f = self.field
        x = f.coerce(x)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def shift_divide_exponents(self, k):
        """For f with only exponents divisible by k, return g with g(x^k) = f."""
        f = self.field
        out = []
        for i, c in enumerate(self.coeffs):
            if i % k == 0:
                out.append(c)
            elif c != f.zero:
                raise ValueError("exponent not divisible")
        return UniPoly(f, out)

    def __str__(self, var="z"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == self.field.zero:
                continue
            neg = (isinstance(c, (int, Fraction))) and c < 0
            mag = -c if neg else c
            if i == 0:
                body = _coeff_str(mag)
            else:
                v = var if i == 1 else f"{var}^{i}"
                body = v if mag == self.field.one else f"{_coeff_str(mag)}{v}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"UniPoly({self})"


def _fp_convolve(a, b, p):
    """Exact convolution mod p via 15-bit limb splitting in int64."""
    aa = np.array(a, dtype=np.int64)
    bb = np.array(b, dtype=np.int64)
    a_lo, a_hi = aa & 0x7FFF, aa >> 15
    b_lo, b_hi = bb & 0x7FFF, bb >> 15
    n = len(a) + len(b) - 1
    # bound per partial convolution: len * 2^30 < 2^63 for len < 2^33
    lo = np.convolve(a_lo, b_lo) % p
    mid = (np.convolve(a_lo, b_hi) + np.convolve(a_hi, b_lo)) % p
    hi = np.convolve(a_hi, b_hi) % p
    out = (lo + (mid << 15) % p + (hi * ((1 << 30) % p))) % p
    return [int(x) for x in out[:n]]


def uni_pth_root(f: UniPoly) -> UniPoly:
    """p-th root of f over F_p (prime field: coefficient p-th root is identity)."""
    p = f.field.char
    return f.shift_divide_exponents(p)


def sqfree_uni(f: UniPoly) -> UniPoly:
    """Monic square-free part: the product of the distinct irreducible factors."""
    if f.is_zero():
        raise ZeroPolynomial("sqfree of zero polynomial")
    if f.degree() < 1:
        raise ConstantPolynomial("sqfree of constant polynomial")
    fld = f.field
    if fld.char == 0:
        g = f.gcd(f.derivative())
        return (f // g).monic()
    d = f.derivative()
    if d.is_zero():
        return sqfree_uni(uni_pth_root(f))
    c = f.gcd(d)
    w = (f // c).monic()  # factors with multiplicity not divisible by p
    # strip the w-part out of c, leaving the factors of p-divisible multiplicity
    r = c
    g = r.gcd(w)
    while g.degree() > 0:
        r = r // g
        g = r.gcd(w)
    if r.degree() > 0:
        return (w * sqfree_uni(uni_pth_root(r.monic()))).monic()
    return w


def content_primitive(f: UniPoly) -> tuple[Fraction, list[int]]:
    """Over Q: write f = content * primitive with integer, coprime coefficients
    and positive leading coefficient."""
    if f.is_zero():
        return Fraction(0), []
    den = reduce(lcm, (c.denominator for c in f.coeffs), 1)
    ints = [int(c * den) for c in f.coeffs]
    g = reduce(gcd, (abs(c) for c in ints), 0)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [c // g for c in ints]
