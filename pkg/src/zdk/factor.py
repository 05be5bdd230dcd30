"""Univariate factorization over prime fields (squarefree split, distinct
degree, Cantor-Zassenhaus) and over Q (Zassenhaus: factor modulo a good
prime, Hensel lift, recombine).

Over Q an irreducibility fast path intersects modular factor-degree
patterns across several primes; when the intersection rules out every
proper degree the polynomial is irreducible and no lifting happens.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from .arith import prime_stream
from .errors import ZeroPolynomial
from .fields import GF, QQ, Field
from .poly import UniPoly, content_primitive, uni_pth_root


@dataclass(frozen=True)
class Factorization:
    field: Field
    unit: object
    factors: tuple  # ((monic irreducible UniPoly, multiplicity), ...)

    def expand(self) -> UniPoly:
        out = UniPoly(self.field, [self.unit])
        for g, m in self.factors:
            out = out * g ** m
        return out

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


def _sort_factors(factors):
    return tuple(sorted(factors, key=lambda fm: (fm[0].degree(),
                                                 fm[0].coeffs)))


# ---------------------------------------------------------------------------
# Prime fields
# ---------------------------------------------------------------------------

def _sqf_decomp_fp(f: UniPoly):
    """Squarefree decomposition of a monic f over F_p: [(g, mult)]."""
    p = f.field.char
    out = []
    d = f.derivative()
    if d.is_zero():
        for g, m in _sqf_decomp_fp(uni_pth_root(f)):
            out.append((g, m * p))
        return out
    c = f.gcd(d)
    w = (f // c).monic()
    i = 1
    while w.degree() > 0:
        y = w.gcd(c)
        z = (w // y).monic()
        if z.degree() > 0:
            out.append((z, i))
        i += 1
        w = y
        c = (c // y).monic()
    if c.degree() > 0:
        for g, m in _sqf_decomp_fp(uni_pth_root(c)):
            out.append((g, m * p))
    return out


def _ddf(f: UniPoly):
    """Distinct-degree split of a monic squarefree f: [(product, d)]."""
    p = f.field.char
    x = UniPoly.x(f.field)
    g = f
    h = x % g
    out = []
    d = 0
    while g.degree() >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, g)
        gd = (h - x).gcd(g)
        if gd.degree() > 0:
            out.append((gd, d))
            g = (g // gd).monic()
            h = h % g
    if g.degree() > 0:
        out.append((g, g.degree()))
    return out


def _edf(f: UniPoly, d: int, rng: random.Random):
    """Equal-degree split: f monic squarefree, all factors of degree d."""
    if f.degree() == d:
        return [f]
    p = f.field.char
    field = f.field
    n = f.degree()
    while True:
        a = UniPoly(field, [rng.randrange(p) for _ in range(n)])
        if a.degree() < 1:
            continue
        if p == 2:
            t = a
            c = a
            for _ in range(d - 1):
                c = c.pow_mod(2, f)
                t = t + c
            h = t.gcd(f)
        else:
            e = (p ** d - 1) // 2
            h = (a.pow_mod(e, f) - UniPoly.one(field)).gcd(f)
        if 0 < h.degree() < n:
            h = h.monic()
            return _edf(h, d, rng) + _edf((f // h).monic(), d, rng)


def factor_uni_fp(f: UniPoly, seed: int = 0) -> Factorization:
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = f.lc()
    g = f.monic()
    if g.degree() == 0:
        return Factorization(f.field, unit, ())
    rng = random.Random(seed)
    out = []
    for h, mult in _sqf_decomp_fp(g):
        for block, d in _ddf(h):
            for irr in _edf(block, d, rng):
                out.append((irr, mult))
    return Factorization(f.field, unit, _sort_factors(out))


# ---------------------------------------------------------------------------
# Coefficient-list arithmetic mod m (m = p^k, not prime)
# ---------------------------------------------------------------------------

def _ztrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % m
    return _ztrim(out)


def _zadd(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _ztrim(out)


def _zsub(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _ztrim(out)


def _zdivmod(a, b, m):
    """Division by monic b, coefficients mod m."""
    rem = [c % m for c in a]
    d = len(b) - 1
    if len(rem) <= d:
        return [], _ztrim(rem)
    quo = [0] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c:
            quo[i - d] = c
            for j in range(len(b)):
                rem[i - d + j] = (rem[i - d + j] - c * b[j]) % m
    return _ztrim(quo), _ztrim(rem[:d])


def _poly_ext_gcd_fp(a, b, p):
    """(s, t) with s*a + t*b = 1 over F_p; a, b coprime coefficient lists."""
    fld = GF(p)
    A, B = UniPoly(fld, a), UniPoly(fld, b)
    s0, s1 = UniPoly.one(fld), UniPoly.zero(fld)
    t0, t1 = UniPoly.zero(fld), UniPoly.one(fld)
    while not B.is_zero():
        q, r = A.divmod(B)
        A, B = B, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    assert A.degree() == 0
    inv = pow(A.coeffs[0], -1, p)
    return ([c * inv % p for c in s0.coeffs],
            [c * inv % p for c in t0.coeffs])


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from f = g*h, s*g + t*h = 1 (mod m) to mod m^2.

    h monic; g carries the leading coefficient of f.
    """
    m2 = m * m
    e = _zsub(f, _zmul(g, h, m2), m2)
    q, r = _zdivmod(_zmul(s, e, m2), h, m2)
    g2 = _zadd(g, _zadd(_zmul(t, e, m2), _zmul(q, g, m2), m2), m2)
    h2 = _zadd(h, r, m2)
    b = _zsub(_zadd(_zmul(s, g2, m2), _zmul(t, h2, m2), m2), [1], m2)
    c, d = _zdivmod(_zmul(s, b, m2), h2, m2)
    s2 = _zsub(s, d, m2)
    t2 = _zsub(t, _zadd(_zmul(t, b, m2), _zmul(c, g2, m2), m2), m2)
    return g2, h2, s2, t2


def _hensel_tree(f, facs, p, target):
    """Lift monic factors of f mod p to monic factors mod m >= target.

    f: integer coefficient list with lc invertible mod p and
    f = lc * prod(facs) mod p.  Returns (m, [monic factor lists mod m]).
    """
    m = p
    while m < target:
        m *= m

    def rec(fc, parts):
        if len(parts) == 1:
            inv = pow(fc[-1] % m, -1, m)
            return [[c * inv % m for c in fc]]
        half = len(parts) // 2
        left, right = parts[:half], parts[half:]
        lc = fc[-1] % p
        g = [lc]
        for q in left:
            g = _zmul(g, q, p)
        h = [1]
        for q in right:
            h = _zmul(h, q, p)
        s, t = _poly_ext_gcd_fp(g, h, p)
        mod = p
        while mod < m:
            g, h, s, t = _hensel_step([c % (mod * mod) for c in fc],
                                      g, h, s, t, mod)
            mod *= mod
        return rec(g, left) + rec(h, right)

    return m, rec([c % m for c in f], facs)


# ---------------------------------------------------------------------------
# Rationals
# ---------------------------------------------------------------------------

def _subset_sum_mask(degrees):
    bits = 1
    for d in degrees:
        bits |= bits << d
    return bits


def _pattern_primes(ints, seed, want):
    """Sample primes where the image is squarefree; collect (p, factor
    degree lists) until `want` of them."""
    lc = ints[-1]
    found = []
    stream = prime_stream(seed + 0x5eed, lo=1 << 20, hi=1 << 21)
    tried = 0
    for p in stream:
        tried += 1
        if tried > 20 * want:
            break
        if lc % p == 0:
            continue
        fld = GF(p)
        gp = UniPoly(fld, ints).monic()
        if gp.degree() != len(ints) - 1:
            continue
        if gp.gcd(gp.derivative()).degree() != 0:
            continue
        degs = []
        for block, d in _ddf(gp):
            degs.extend([d] * (block.degree() // d))
        found.append((p, degs))
        if len(found) >= want:
            break
    return found


def _int_poly_divides(cand, g):
    """Does the integer polynomial cand divide g exactly over Z?"""
    a = [Fraction(c) for c in g]
    q, r = UniPoly(QQ, a).divmod(UniPoly(QQ, cand))
    return (not r.coeffs) and all(c.denominator == 1 for c in q.coeffs)


def _centered(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _zassenhaus(ints, seed):
    """Irreducible primitive integer factors of a primitive squarefree
    integer polynomial of degree >= 1."""
    n = len(ints) - 1
    if n == 1:
        return [ints]
    samples = _pattern_primes(ints, seed, want=10)
    if not samples:
        raise ArithmeticError("no usable prime found for factoring")
    allowed = (1 << (n + 1)) - 1
    for _, degs in samples:
        allowed &= _subset_sum_mask(degs)
    if allowed & ~((1 << n) | 1) == 0:
        return [ints]  # no proper factor degree survives: irreducible
    p, degs = min(samples, key=lambda s: len(s[1]))
    fld = GF(p)
    gp = UniPoly(fld, ints).monic()
    modular = [g.coeffs for g, _ in factor_uni_fp(gp, seed=seed).factors]
    if len(modular) == 1:
        return [ints]
    lc = ints[-1]
    norm = isqrt(sum(c * c for c in ints)) + 1
    bound = 2 * abs(lc) * norm * (1 << (n + 1))
    m, lifted = _hensel_tree(ints, modular, p, bound)

    result = []
    g = list(ints)
    facs = lifted

    def cand_poly(subset):
        c = [lc % m]
        for i in subset:
            c = _zmul(c, facs[i], m)
        cand = [_centered(x, m) for x in c]
        d = 0
        for x in cand:
            d = gcd(d, abs(x))
        return [x // d for x in cand] if d > 1 else cand

    s = 1
    while 2 * s <= len(facs):
        hit = None
        g0 = g[0]
        for subset in combinations(range(len(facs)), s):
            dsum = sum(len(facs[i]) - 1 for i in subset)
            if not (allowed >> dsum) & 1:
                continue
            c0 = lc % m
            for i in subset:
                c0 = c0 * facs[i][0] % m
            c0 = _centered(c0, m)
            if c0 == 0:
                if g0 != 0:
                    continue
            elif (lc * g0) % c0 != 0:
                continue
            cand = cand_poly(subset)
            if _int_poly_divides(cand, g):
                hit = (subset, cand)
                break
        if hit is None:
            s += 1
            continue
        subset, cand = hit
        result.append(cand)
        q = UniPoly(QQ, [Fraction(c) for c in g]).divmod(
            UniPoly(QQ, cand))[0]
        g = [int(c) for c in q.coeffs]
        lc = g[-1]
        facs = [fc for i, fc in enumerate(facs) if i not in subset]
        s = 1
    if len(g) > 1:
        result.append(g)
    return result


def _yun_q(f: UniPoly):
    """Squarefree decomposition over Q of a monic f: [(g, mult)]."""
    out = []
    g = f.gcd(f.derivative())
    c = (f // g).monic()
    d = (f.derivative() // g) - c.derivative()
    i = 1
    while c.degree() > 0:
        a = c.gcd(d)
        if a.degree() > 0:
            out.append((a, i))
        c = (c // a).monic()
        d = (d // a) - c.derivative()
        i += 1
    return out


def factor_uni_q(f: UniPoly, seed: int = 0) -> Factorization:
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = f.lc()
    g = f.monic()
    if g.degree() == 0:
        return Factorization(QQ, unit, ())
    out = []
    # pull out the power of z up front so candidates have nonzero
    # constant terms
    k = next(i for i, c in enumerate(g.coeffs) if c != 0)
    if k:
        out.append((UniPoly.x(QQ), k))
        g = UniPoly(QQ, g.coeffs[k:])
    if g.degree() > 0:
        _, ints = content_primitive(g)
        if _modular_squarefree(ints, seed):
            parts = [(g, 1)]
        else:
            parts = _yun_q(g)
        for part, mult in parts:
            _, pints = content_primitive(part)
            for fac in _zassenhaus(pints, seed):
                mono = UniPoly(QQ, [Fraction(c, fac[-1]) for c in fac])
                out.append((mono, mult))
    return Factorization(QQ, unit, _sort_factors(out))


def _modular_squarefree(ints, seed) -> bool:
    """True if some usable prime certifies gcd(f, f') = 1 over Q."""
    lc = ints[-1]
    for i, p in enumerate(prime_stream(seed + 0xf00, lo=1 << 20, hi=1 << 21)):
        if i >= 8:
            return False
        if lc % p == 0:
            continue
        fld = GF(p)
        gp = UniPoly(fld, ints)
        if gp.degree() != len(ints) - 1:
            continue
        if gp.gcd(gp.derivative()).degree() == 0:
            return True
    return False
