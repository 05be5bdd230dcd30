"""Buchberger engine: reduced Groebner bases, normal forms, quotient bases,
sigma-denominators, reductions mod p, elimination, and ideal intersection.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from functools import reduce
from math import lcm

from .errors import NotZeroDimensional, UglyPrime, ZeroIdeal
from .fields import GF
from .poly import (
    DEGREVLEX,
    BlockOrder,
    MultiPoly,
    Ring,
    TermOrdering,
    den_poly,
    pp_div,
    pp_divides,
    pp_lcm,
    pp_mul,
)


@dataclass(frozen=True)
class ReducedGB:
    ring: Ring
    elements: tuple[MultiPoly, ...]  # monic, self-reduced, LTs sigma-increasing

    @property
    def ordering(self):
        return self.ring.order

    def leading_pps(self):
        return [g.leading_pp() for g in self.elements]

    def contains_one(self):
        return len(self.elements) == 1 and self.elements[0].is_constant() and \
            not self.elements[0].is_zero()


class Ideal:
    """Generators plus a lazily cached reduced Groebner basis per ordering."""

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        self.gens = tuple(gens)
        self._gb_cache: dict[TermOrdering, ReducedGB] = {}

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"

    def install_gb(self, gb: ReducedGB):
        self._gb_cache[gb.ordering] = gb


def reduced_gb(ideal: Ideal, ordering: TermOrdering | None = None) -> ReducedGB:
    ordering = ordering or ideal.ring.order
    cached = ideal._gb_cache.get(ordering)
    if cached is not None:
        return cached
    ring = ideal.ring
    if ordering != ring.order:
        ring = Ring(ring.field, ring.names, ordering)
    gens = [MultiPoly(ring, dict(g.terms)) for g in ideal.gens if g.terms]
    gb = ReducedGB(ring, tuple(_buchberger(ring, gens)))
    ideal._gb_cache[ordering] = gb
    return gb


# ---------------------------------------------------------------------------
# Normal form
# ---------------------------------------------------------------------------

def _neg_key(k):
    if isinstance(k, tuple):
        return tuple(_neg_key(x) for x in k)
    return -k


def _nf_terms(terms: dict, reducers, ring: Ring) -> dict:
    """Full normal form of a term dict w.r.t. a list of monic reducers.

    reducers: list of (lt_pp, tail_items) where tail_items are the non-leading
    terms of a monic polynomial.  Terms are processed sigma-descending, so
    each monomial is expanded at most once.
    """
    fld = ring.field
    p = fld.char
    zero = fld.zero
    key = ring.order.key
    todo = dict(terms)
    out = {}
    lts = [r[0] for r in reducers]
    heap = [(_neg_key(key(t)), t) for t in todo]
    heapq.heapify(heap)
    while heap:
        _, t = heapq.heappop(heap)
        c = todo.pop(t, zero)
        if c == zero:
            continue
        hit = None
        for idx, lt in enumerate(lts):
            if pp_divides(lt, t):
                hit = idx
                break
        if hit is None:
            out[t] = c
            continue
        s = pp_div(t, lts[hit])
        tail = reducers[hit][1]
        if p:
            for m, cm in tail:
                q = pp_mul(s, m)
                if q not in todo:
                    heapq.heappush(heap, (_neg_key(key(q)), q))
                    todo[q] = -c * cm % p
                else:
                    todo[q] = (todo[q] - c * cm) % p
        else:
            for m, cm in tail:
                q = pp_mul(s, m)
                if q not in todo:
                    heapq.heappush(heap, (_neg_key(key(q)), q))
                    todo[q] = -c * cm
                else:
                    todo[q] = todo[q] - c * cm
    return out


def _reducers(polys):
    out = []
    for g in polys:
        lt = g.leading_pp()
        tail = [(m, c) for m, c in g.terms.items() if m != lt]
        out.append((lt, tail))
    return out


def normal_form(f: MultiPoly, gb: ReducedGB) -> MultiPoly:
    if f.ring.names != gb.ring.names or f.ring.field != gb.ring.field:
        raise ValueError("polynomial and basis live in different rings")
    if f.ring.order != gb.ring.order:
        f = MultiPoly(gb.ring, dict(f.terms))
    if not gb.elements:
        return f
    return MultiPoly(gb.ring, _nf_terms(f.terms, _reducers(gb.elements), gb.ring))


# ---------------------------------------------------------------------------
# Buchberger with normal pair selection and Gebauer-Moeller style pruning
# ---------------------------------------------------------------------------

def _buchberger(ring: Ring, gens) -> list[MultiPoly]:
    if not gens:
        return []
    key = ring.order.key
    G = [g.monic() for g in gens]
    G.sort(key=lambda g: key(g.leading_pp()))

    # Reduction uses only elements whose leading terms are pairwise
    # non-divisible; dominated elements stay in G for the pair bookkeeping
    # but contribute nothing new to normal forms.
    red: dict[int, tuple] = {}

    def admit(t):
        g = G[t]
        lt = g.leading_pp()
        for idx in [i for i, (l, _) in red.items() if pp_divides(lt, l)]:
            del red[idx]
        red[t] = (lt, [(m, c) for m, c in g.terms.items() if m != lt])

    pairs = []  # heap of (lcm_key, i, j)
    done_pairs = set()

    def push_pairs(t):
        lt_t = G[t].leading_pp()
        for i in range(t):
            l = pp_lcm(G[i].leading_pp(), lt_t)
            heapq.heappush(pairs, (key(l), i, t))

    for t in range(len(G)):
        admit(t)
        push_pairs(t)

    while pairs:
        lk, i, j = heapq.heappop(pairs)
        done_pairs.add((i, j))
        lti, ltj = G[i].leading_pp(), G[j].leading_pp()
        l = pp_lcm(lti, ltj)
        # Buchberger's first criterion: coprime leading terms
        if l == pp_mul(lti, ltj):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if pp_divides(G[k].leading_pp(), l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done_pairs and b in done_pairs:
                    skip = True
                    break
        if skip:
            continue
        s = G[i].mul_pp(pp_div(l, lti)) - G[j].mul_pp(pp_div(l, ltj))
        r = _nf_terms(s.terms, list(red.values()), ring)
        if not r:
            continue
        G.append(MultiPoly(ring, r).monic())
        t = len(G) - 1
        admit(t)
        push_pairs(t)

    return _interreduce(ring, [G[i] for i in red])


def _interreduce(ring: Ring, basis) -> list[MultiPoly]:
    """Reduced GB from a GB whose leading terms may still overlap."""
    key = ring.order.key
    basis = sorted(basis, key=lambda g: key(g.leading_pp()))
    kept = []
    for g in basis:
        lt = g.leading_pp()
        # a divisor is always sigma-smaller, so scanning ascending suffices
        if any(pp_divides(h.leading_pp(), lt) for h in kept):
            continue
        kept.append(g)
    # leading terms are now pairwise non-divisible: one full normal form
    # per element reduces every tail completely
    out = []
    for i, g in enumerate(kept):
        others = out + kept[i + 1:]
        if not others:
            out.append(g.monic())
            continue
        r = _nf_terms(g.terms, _reducers(others), ring)
        out.append(MultiPoly(ring, r).monic())
    out.sort(key=lambda g: key(g.leading_pp()))
    return out


# ---------------------------------------------------------------------------
# Quotient basis, denominators, reductions mod p
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientBasis:
    ring: Ring
    monomials: tuple[tuple[int, ...], ...]  # sigma-increasing, first is 1

    def __len__(self):
        return len(self.monomials)

    def index(self):
        return {pp: i for i, pp in enumerate(self.monomials)}


def quotient_basis(gb: ReducedGB) -> QuotientBasis:
    """Monomials outside LT(I), sigma-increasing; raises NotZeroDimensional."""
    ring = gb.ring
    n = ring.nvars
    if gb.contains_one():
        return QuotientBasis(ring, ())
    lts = gb.leading_pps()
    for i in range(n):
        if not any(lt[i] > 0 and all(lt[j] == 0 for j in range(n) if j != i)
                   for lt in lts):
            raise NotZeroDimensional(
                f"no pure power of {ring.names[i]} among leading terms")
    unit = (0,) * n
    seen = {unit}
    stack = [unit]
    basis = []
    while stack:
        t = stack.pop()
        if any(pp_divides(lt, t) for lt in lts):
            continue
        basis.append(t)
        for i in range(n):
            s = t[:i] + (t[i] + 1,) + t[i + 1:]
            if s not in seen:
                seen.add(s)
                stack.append(s)
    basis.sort(key=ring.order.key)
    return QuotientBasis(ring, tuple(basis))


def den_sigma(ideal: Ideal, ordering: TermOrdering | None = None) -> int:
    """LCM of coefficient denominators across the reduced GB over Q."""
    if ideal.ring.field.char != 0:
        raise ValueError("den_sigma requires an ideal over Q")
    gb = reduced_gb(ideal, ordering)
    if not gb.elements:
        raise ZeroIdeal("sigma-denominator of the zero ideal")
    return reduce(lcm, (den_poly(g) for g in gb.elements), 1)


def reduce_ideal_mod_p(ideal: Ideal, p: int,
                       ordering: TermOrdering | None = None) -> Ideal:
    """(p, sigma)-reduction: image of the reduced GB, installed as a GB."""
    ordering = ordering or ideal.ring.order
    d = den_sigma(ideal, ordering)
    if d % p == 0:
        raise UglyPrime(f"{p} divides den_sigma = {d}")
    gb = reduced_gb(ideal, ordering)
    ring_p = Ring(GF(p), gb.ring.names, ordering)
    fld = ring_p.field
    images = []
    for g in gb.elements:
        terms = {}
        for pp, c in g.terms.items():
            v = fld.coerce(c)
            if v:
                terms[pp] = v
        images.append(MultiPoly(ring_p, terms))
    out = Ideal(ring_p, images)
    # Image of a reduced GB at a usable prime is itself the reduced GB.
    out.install_gb(ReducedGB(ring_p, tuple(images)))
    return out


# ---------------------------------------------------------------------------
# Elimination and intersection
# ---------------------------------------------------------------------------

def _restrict_poly(f: MultiPoly, keep: list[int], ring2: Ring) -> MultiPoly:
    return MultiPoly(ring2, {tuple(pp[i] for i in keep): c
                             for pp, c in f.terms.items()})


def eliminate(ideal: Ideal, var_indices) -> Ideal:
    """I intersect K[remaining vars], via a block-degrevlex elimination order."""
    front = tuple(sorted(var_indices))
    ring = ideal.ring
    keep = [i for i in range(ring.nvars) if i not in set(front)]
    gb = reduced_gb(ideal, BlockOrder(front))
    kept = [g for g in gb.elements
            if all(all(pp[i] == 0 for i in front) for pp in g.terms)]
    ring2 = Ring(ring.field, tuple(ring.names[i] for i in keep), DEGREVLEX)
    gens2 = [_restrict_poly(g, keep, ring2) for g in kept]
    out = Ideal(ring2, gens2)
    # kept elements of the reduced block-order GB restrict to the reduced
    # degrevlex GB of the elimination ideal
    gens2.sort(key=lambda g: ring2.order.key(g.leading_pp()))
    out.install_gb(ReducedGB(ring2, tuple(gens2)))
    return out


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J via tag-variable elimination of t*I + (1-t)*J."""
    if I.ring.names != J.ring.names or I.ring.field != J.ring.field:
        raise ValueError("ideals live in different rings")
    ring = I.ring
    tag = "t_"
    while tag in ring.names:
        tag += "_"
    ring_t = Ring(ring.field, (tag,) + ring.names, DEGREVLEX)

    def lift(f, mult_tag):
        d = {}
        for pp, c in f.terms.items():
            d[(1 if mult_tag else 0,) + pp] = c
        return MultiPoly(ring_t, d)

    t = ring_t.var(0)
    one = ring_t.one()
    gens = [lift(f, True) for f in I.gens]
    gens += [(one - t) * lift(g, False) for g in J.gens]
    elim = eliminate(Ideal(ring_t, gens), [0])
    # rebuild over the original ring (ordering included)
    gens2 = [MultiPoly(ring, dict(g.terms)) for g in elim.gens]
    return Ideal(ring, gens2)


def ideal_add(I: Ideal, extra) -> Ideal:
    return Ideal(I.ring, list(I.gens) + list(extra))


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    a = reduced_gb(I)
    b = reduced_gb(J, a.ordering)
    return [g.terms for g in a.elements] == [g.terms for g in b.elements]


def ideal_contains_one(I: Ideal) -> bool:
    gb = reduced_gb(I)
    return gb.contains_one()


def canonical_gb_text(I: Ideal) -> str:
    gb = reduced_gb(I)
    return ", ".join(str(g) for g in gb.elements)
