"""Shared builders for the randomized suites."""

from zdk.groebner import Ideal
from zdk.poly import Ring


def random_tail(ring, rng, max_deg, nterms=3):
    """Random polynomial of total degree <= max_deg (possibly zero)."""
    terms = []
    for _ in range(rng.randint(0, nterms)):
        while True:
            pp = tuple(rng.randint(0, max_deg) for _ in range(ring.nvars))
            if sum(pp) <= max_deg:
                break
        terms.append((pp, rng.randint(-9, 9)))
    return ring.from_terms(terms)


def random_zero_dim_ideal(ring: Ring, rng, max_dim=30, extra_gen=False):
    """Zero-dimensional ideal: per-variable generators x_i^{e_i} + tail
    with prod e_i <= max_dim, tails of lower total degree."""
    n = ring.nvars
    while True:
        exps = [rng.randint(1, 3) for _ in range(n)]
        prod = 1
        for e in exps:
            prod *= e
        if prod <= max_dim:
            break
    gens = []
    for i, e in enumerate(exps):
        lead = ring.from_terms([(tuple(e if j == i else 0 for j in range(n)), 1)])
        gens.append(lead + random_tail(ring, rng, e - 1))
    if extra_gen and rng.random() < 0.5:
        g = random_tail(ring, rng, max(exps))
        if g.terms:
            gens.append(g)
    return Ideal(ring, gens)


def random_element(ring, rng, max_deg=3, nterms=4):
    f = random_tail(ring, rng, max_deg, nterms)
    if not f.terms:
        f = ring.one()
    return f
