"""Radicality, maximality and primarity tests, radicals, Frobenius spaces,
and primary decomposition of zero-dimensional ideals.

All tests follow the same pattern: a cheap loop over the variables using
minimal polynomials, then a characteristic-dependent finish (Frobenius
space dimension over a finite field, random linear forms over Q).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .errors import HeuristicExhausted, NotZeroDimensional
from .factor import Factorization, factor_uni_fp, factor_uni_q
from .groebner import (
    Ideal,
    canonical_gb_text,
    ideal_add,
    quotient_basis,
    reduced_gb,
)
from .minpoly import minpoly_def, minpoly_mat
from .modular import minpoly_modular
from .poly import MultiPoly, Ring, UniPoly, sqfree_uni, subst_univariate
from .quotient import QuotientEngine, fp_kernel_basis

MAX_ATTEMPTS = 20

# first loops switch from iterated normal forms to the multiplication
# matrix when the element has many terms
_DENSE_TERMS = 50


class SplitToken(Enum):
    TOTAL = "TotalSplit"
    PARTIAL = "PartialSplit"


@dataclass
class SplitReport:
    splitter: MultiPoly
    factor_powers: list[UniPoly]  # mu_j^{d_j}
    token: SplitToken


@dataclass
class FrobeniusBasis:
    elements: list[MultiPoly]

    @property
    def dim(self):
        return len(self.elements)


def _dim(ideal: Ideal, ordering=None) -> int:
    return len(quotient_basis(reduced_gb(ideal, ordering)))


def _minpoly(f: MultiPoly, ideal: Ideal, ordering=None, seed: int = 0) -> UniPoly:
    """Internal minimal polynomial: verified modular over Q, direct over F_p."""
    if ideal.ring.field.char == 0:
        mu, _ = minpoly_modular(f, ideal, ordering, verify=True, seed=seed)
        return mu
    if len(f.terms) > _DENSE_TERMS:
        return minpoly_mat(f, ideal, ordering)
    return minpoly_def(f, ideal, ordering)


def _factor(mu: UniPoly, seed: int = 0) -> Factorization:
    if mu.field.char == 0:
        return factor_uni_q(mu, seed=seed)
    return factor_uni_fp(mu, seed=seed)


def _uni_in_var(mu: UniPoly, ring: Ring, i: int) -> MultiPoly:
    """mu(x_i) as a multivariate polynomial."""
    terms = {}
    for e, c in enumerate(mu.coeffs):
        if c != ring.field.zero:
            pp = tuple(e if j == i else 0 for j in range(ring.nvars))
            terms[pp] = c
    return MultiPoly(ring, terms)


def _random_linear_form(ring: Ring, rng: random.Random) -> MultiPoly:
    """Linear form with coefficients uniform in [-999, 999] without 0."""
    terms = {}
    for i in range(ring.nvars):
        c = 0
        while c == 0:
            c = rng.randint(-999, 999)
        pp = tuple(1 if j == i else 0 for j in range(ring.nvars))
        terms[pp] = ring.field.coerce(c)
    return MultiPoly(ring, terms)


def _is_squarefree(fact: Factorization) -> bool:
    return all(m == 1 for _, m in fact.factors)


# ---------------------------------------------------------------------------
# Radicals
# ---------------------------------------------------------------------------

def is_radical_0dim(ideal: Ideal, ordering=None, seed: int = 0) -> bool:
    d = _dim(ideal, ordering)
    ring = ideal.ring
    for i in range(ring.nvars):
        mu = _minpoly(ring.var(i), ideal, ordering, seed)
        if sqfree_uni(mu).degree() != mu.degree():
            return False
        if mu.degree() == d:
            return True
    return True


def radical_0dim(ideal: Ideal, ordering=None, seed: int = 0) -> Ideal:
    J = ideal
    d = _dim(J, ordering)
    ring = ideal.ring
    for i in range(ring.nvars):
        mu = _minpoly(ring.var(i), J, ordering, seed)
        if sqfree_uni(mu).degree() != mu.degree():
            mu = sqfree_uni(mu)
            J = ideal_add(J, [_uni_in_var(mu, ring, i)])
            d = _dim(J, ordering)
        if mu.degree() == d:
            return J
    return J


# ---------------------------------------------------------------------------
# Frobenius space
# ---------------------------------------------------------------------------

def frobenius_basis(ideal: Ideal, ordering=None) -> FrobeniusBasis:
    gb = reduced_gb(ideal, ordering)
    engine = QuotientEngine(gb)
    p = engine.p
    phi = engine.frobenius_matrix()
    for i in range(engine.dim):
        phi[i, i] = (phi[i, i] - 1) % p
    rows = fp_kernel_basis(phi, p)
    return FrobeniusBasis([engine.poly_of(r) for r in rows])


# ---------------------------------------------------------------------------
# Maximality and primarity
# ---------------------------------------------------------------------------

def is_maximal(ideal: Ideal, ordering=None, seed: int = 0,
               max_attempts: int = MAX_ATTEMPTS) -> bool:
    try:
        d = _dim(ideal, ordering)
    except NotZeroDimensional:
        return False
    if d == 0:
        return False  # the unit ideal
    ring = ideal.ring
    for i in range(ring.nvars):
        mu = _minpoly(ring.var(i), ideal, ordering, seed)
        if not _factor(mu, seed).is_irreducible():
            return False
        if mu.degree() == d:
            return True
    if ring.field.char:
        return frobenius_basis(ideal, ordering).dim == 1
    rng = random.Random(seed)
    for _ in range(max_attempts):
        ell = _random_linear_form(ring, rng)
        mu = _minpoly(ell, ideal, ordering, seed)
        if not _factor(mu, seed).is_irreducible():
            return False
        if mu.degree() == d:
            return True
    raise HeuristicExhausted(
        f"no decisive linear form after {max_attempts} attempts")


def is_primary_0dim(ideal: Ideal, ordering=None, seed: int = 0,
                    max_attempts: int = MAX_ATTEMPTS) -> bool:
    J = ideal
    d = _dim(J, ordering)
    if d == 0:
        return False
    ring = ideal.ring
    for i in range(ring.nvars):
        mu = _minpoly(ring.var(i), J, ordering, seed)
        fact = _factor(mu, seed)
        if not fact.is_prime_power():
            return False
        if mu.degree() == d:
            return True
        if not _is_squarefree(fact):
            mu = sqfree_uni(mu)
            J = ideal_add(J, [_uni_in_var(mu, ring, i)])
            d = _dim(J, ordering)
            if mu.degree() == d:
                return True
    if ring.field.char:
        return frobenius_basis(ideal, ordering).dim == 1
    rng = random.Random(seed)
    for _ in range(max_attempts):
        ell = _random_linear_form(ring, rng)
        mu = _minpoly(ell, J, ordering, seed)
        if not _factor(mu, seed).is_irreducible():
            return False
        if mu.degree() == d:
            return True
    raise HeuristicExhausted(
        f"no decisive linear form after {max_attempts} attempts")


# ---------------------------------------------------------------------------
# Splitting polynomials
# ---------------------------------------------------------------------------

def _powered(fact: Factorization):
    return [g ** m for g, m in fact.factors]


def pd_splitting(ideal: Ideal, ordering=None, seed: int = 0,
                 max_attempts: int = MAX_ATTEMPTS) -> SplitReport:
    d = _dim(ideal, ordering)
    ring = ideal.ring
    mus = []
    for i in range(ring.nvars):
        mu = _minpoly(ring.var(i), ideal, ordering, seed)
        mus.append(mu)
        fact = _factor(mu, seed)
        if mu.degree() == d:
            return SplitReport(ring.var(i), _powered(fact), SplitToken.TOTAL)
        if len(fact.factors) > 1:
            return SplitReport(ring.var(i), _powered(fact), SplitToken.PARTIAL)
    if ring.field.char:
        return pd_splitting_finite(ideal, ordering, seed)
    J = ideal_add(ideal, [_uni_in_var(sqfree_uni(mus[i]), ring, i)
                          for i in range(ring.nvars)])
    if is_maximal(J, ordering, seed, max_attempts):
        return SplitReport(ring.zero(), [UniPoly.x(ring.field)],
                           SplitToken.TOTAL)
    return pd_splitting_infinite(ideal, ordering, seed, max_attempts)


def pd_splitting_finite(ideal: Ideal, ordering=None,
                        seed: int = 0) -> SplitReport:
    ring = ideal.ring
    frb = frobenius_basis(ideal, ordering)
    s = frb.dim
    if s == 1:
        return SplitReport(ring.zero(), [UniPoly.x(ring.field)],
                           SplitToken.TOTAL)
    f = next(b for b in frb.elements if not b.is_constant())
    mu = _minpoly(f, ideal, ordering, seed)
    fact = _factor(mu, seed)
    # Frobenius elements have squarefree minimal polynomials split into
    # linear factors
    factors = [g for g, _ in fact.factors]
    token = SplitToken.TOTAL if mu.degree() == s else SplitToken.PARTIAL
    return SplitReport(f, factors, token)


def pd_splitting_infinite(ideal: Ideal, ordering=None, seed: int = 0,
                          max_attempts: int = MAX_ATTEMPTS) -> SplitReport:
    d = _dim(ideal, ordering)
    ring = ideal.ring
    rng = random.Random(seed)
    for _ in range(max_attempts):
        ell = _random_linear_form(ring, rng)
        mu = _minpoly(ell, ideal, ordering, seed)
        fact = _factor(mu, seed)
        if mu.degree() == d:
            return SplitReport(ell, _powered(fact), SplitToken.TOTAL)
        if len(fact.factors) > 1:
            return SplitReport(ell, _powered(fact), SplitToken.PARTIAL)
    raise HeuristicExhausted(
        f"no splitting linear form after {max_attempts} attempts")


# ---------------------------------------------------------------------------
# Primary decomposition
# ---------------------------------------------------------------------------

def primary_decomposition_core(ideal: Ideal, ordering=None, seed: int = 0,
                               max_attempts: int = MAX_ATTEMPTS):
    rep = pd_splitting(ideal, ordering, seed, max_attempts)
    if len(rep.factor_powers) == 1:
        return [ideal], SplitToken.TOTAL
    comps = []
    for power in rep.factor_powers:
        comps.append(ideal_add(ideal, [subst_univariate(power, rep.splitter)]))
    return comps, rep.token


def primary_decomposition_0dim(ideal: Ideal, ordering=None, seed: int = 0,
                               max_attempts: int = MAX_ATTEMPTS):
    comps, token = primary_decomposition_core(ideal, ordering, seed,
                                              max_attempts)
    if token is SplitToken.TOTAL:
        result = comps
    else:
        result = []
        for comp in comps:
            if is_primary_0dim(comp, ordering, seed, max_attempts):
                result.append(comp)
            else:
                result.extend(primary_decomposition_0dim(
                    comp, ordering, seed, max_attempts))
    # deterministic order and distinctness via the canonical reduced GB
    seen = {}
    for comp in result:
        seen.setdefault(canonical_gb_text(comp), comp)
    return [seen[k] for k in sorted(seen)]
