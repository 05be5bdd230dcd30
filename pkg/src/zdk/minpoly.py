"""Minimal polynomials of elements of zero-dimensional quotient rings.

Three direct routes are provided: iterating normal forms of powers and
watching for the first linear dependency (the default), powering the
multiplication matrix, and eliminating the original variables after
adjoining one for the element.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .groebner import (
    Ideal,
    QuotientBasis,
    ReducedGB,
    eliminate,
    normal_form,
    quotient_basis,
    reduced_gb,
)
from .lindep import LinDepMill
from .poly import DEGREVLEX, MultiPoly, Ring, UniPoly
from .quotient import QuotientEngine, fp_matvec


def nf_subst(mu: UniPoly, f: MultiPoly, gb: ReducedGB) -> MultiPoly:
    """NF(mu(f)) by Horner's rule, reducing after every step."""
    ring = f.ring
    acc = ring.zero()
    for c in reversed(mu.coeffs):
        acc = normal_form(acc * f + ring.const(c), gb)
    return acc


def _coords(f: MultiPoly, idx, dim, field):
    v = [field.zero] * dim
    for pp, c in f.terms.items():
        v[idx[pp]] = c
    return v


def _mu_from_comb(field, comb) -> UniPoly:
    """z^k minus the dependency combination of lower powers."""
    k = len(comb)
    coeffs = [field.neg(c) for c in comb] + [field.one]
    return UniPoly(field, coeffs)


def minpoly_def(f: MultiPoly, ideal: Ideal, ordering=None) -> UniPoly:
    """Minimal polynomial by iterated normal forms of f^i."""
    gb = reduced_gb(ideal, ordering)
    qb = quotient_basis(gb)
    field = ideal.ring.field
    idx = qb.index()
    dim = len(qb)
    mill = LinDepMill(field, dim)
    f = normal_form(f, gb)
    r = normal_form(ideal.ring.one(), gb)
    while True:
        comb = mill.feed(_coords(r, idx, dim, field))
        if comb is not None:
            return _mu_from_comb(field, comb)
        r = normal_form(r * f, gb)


def mult_matrix(f: MultiPoly, gb: ReducedGB, qb: QuotientBasis):
    """Matrix of multiplication by f; column j holds the coordinates of
    NF(f * t_j).

    Over a prime field: an int64 numpy array.  Over Q: a list of Fraction
    columns.  Columns are built by walking the basis, multiplying an
    earlier column's normal form by one variable.
    """
    field = gb.ring.field
    if field.char:
        return QuotientEngine(gb, qb).mult_matrix(f)
    idx = qb.index()
    dim = len(qb)
    ring = gb.ring
    nfs = [None] * dim
    cols = [None] * dim
    for j, t in enumerate(qb.monomials):
        if j == 0:
            g = normal_form(f, gb)
        else:
            k = next(i for i in range(len(t)) if t[i] > 0)
            prev = t[:k] + (t[k] - 1,) + t[k + 1:]
            g = normal_form(ring.var(k) * nfs[idx[prev]], gb)
        nfs[j] = g
        cols[j] = _coords(g, idx, dim, field)
    return cols


def minpoly_mat(f: MultiPoly, ideal: Ideal, ordering=None) -> UniPoly:
    """Minimal polynomial from powers of the multiplication matrix.

    Only the orbit of the coordinate vector of 1 is needed: the first
    dependency among A^i e_0 occurs at the same index as among the f^i,
    because e_0 is a cyclic-like distinguished vector (t_0 = 1).
    """
    gb = reduced_gb(ideal, ordering)
    qb = quotient_basis(gb)
    field = ideal.ring.field
    dim = len(qb)
    A = mult_matrix(f, gb, qb)
    mill = LinDepMill(field, dim)
    if field.char:
        p = field.char
        v = np.zeros(dim, dtype=np.int64)
        if dim:
            v[0] = 1
        while True:
            comb = mill.feed([int(x) for x in v])
            if comb is not None:
                return _mu_from_comb(field, comb)
            v = fp_matvec(A, v, p)
    v = [Fraction(0)] * dim
    if dim:
        v[0] = Fraction(1)
    while True:
        comb = mill.feed(v)
        if comb is not None:
            return _mu_from_comb(field, comb)
        v = [sum(col[i] * x for col, x in zip(A, v) if x) for i in range(dim)]
    # not reached


def minpoly_elim(f: MultiPoly, ideal: Ideal, var_name: str = "z") -> UniPoly:
    """Minimal polynomial by adjoining a variable for f and eliminating
    the originals: the ideal I + (z - f) meets K[z] in (mu_f)."""
    ring = ideal.ring
    quotient_basis(reduced_gb(ideal))  # zero-dimensionality check
    while var_name in ring.names:
        var_name += "_"
    ring_z = Ring(ring.field, ring.names + (var_name,), DEGREVLEX)

    def lift(g):
        return MultiPoly(ring_z, {pp + (0,): c for pp, c in g.terms.items()})

    gens = [lift(g) for g in ideal.gens]
    gens.append(ring_z.var(ring.nvars) - lift(f))
    front = list(range(ring.nvars))
    elim = eliminate(Ideal(ring_z, gens), front)
    gbz = reduced_gb(elim)
    assert len(gbz.elements) == 1
    g = gbz.elements[0]
    coeffs = [ring.field.zero] * (g.total_degree() + 1)
    for pp, c in g.terms.items():
        coeffs[pp[0]] = c
    return UniPoly(ring.field, coeffs).monic()
