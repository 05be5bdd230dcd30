"""Minimal polynomials over Q by modular images: classify primes, compute
per-prime images, combine by CRT, reconstruct rationals fault-tolerantly,
and verify membership.  A faster heuristic variant skips the Groebner
basis over Q entirely.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction

from .arith import CrtAccumulator, prime_stream
from .errors import HeuristicExhausted, NotZeroDimensional
from .fields import GF, QQ
from .groebner import (
    Ideal,
    den_sigma,
    quotient_basis,
    reduce_ideal_mod_p,
    reduced_gb,
)
from .minpoly import minpoly_def, minpoly_elim, minpoly_mat, nf_subst
from .poly import MultiPoly, Ring, UniPoly, den_poly, poly_map_field


class PrimeClass(Enum):
    USABLE = "usable"
    UGLY = "ugly"


class PrimeQuality(Enum):
    GOOD = "good"
    BAD = "bad"
    UNKNOWN = "unknown"


@dataclass
class ModularRunReport:
    primes_used: list[int] = dc_field(default_factory=list)
    primes_rejected: list[tuple[int, int]] = dc_field(default_factory=list)
    # (prime, degree of its image) for images discarded as bad
    modulus_bits: int = 0
    verified: bool = False
    early_exit: bool = False
    unverified_flag: bool = False

    def summary(self) -> dict:
        return {
            "primes_used": len(self.primes_used),
            "primes_rejected": len(self.primes_rejected),
            "modulus_bits": self.modulus_bits,
            "verified": self.verified,
            "early_exit": self.early_exit,
            "unverified": self.unverified_flag,
        }


def classify_prime(p: int, f: MultiPoly, ideal: Ideal,
                   ordering=None) -> PrimeClass:
    """Usable unless p divides den(f) * den_sigma(I)."""
    if (den_poly(f) * den_sigma(ideal, ordering)) % p == 0:
        return PrimeClass.UGLY
    return PrimeClass.USABLE


def _lift_uni(mu_p: UniPoly, pairs) -> UniPoly:
    return UniPoly(QQ, [Fraction(a, b) for a, b in pairs])


# Safety cap: primes are word-sized, so several hundred of them already
# cover thousands of coefficient bits.
_MAX_PRIMES = 2000


def minpoly_modular(f: MultiPoly, ideal: Ideal, ordering=None,
                    verify: bool = True, seed: int = 0,
                    first_primes=()) -> tuple[UniPoly, ModularRunReport]:
    """Minimal polynomial of f in P/I over Q via modular images.

    first_primes lets callers force the initial primes (useful to exercise
    bad-prime recovery); the seeded word-sized stream follows.
    """
    gb = reduced_gb(ideal, ordering)
    qb = quotient_basis(gb)
    dim = len(qb)
    report = ModularRunReport()
    den = den_poly(f) * den_sigma(ideal, ordering)

    acc: CrtAccumulator | None = None
    degree_certified = False

    def primes():
        yield from first_primes
        yield from prime_stream(seed)

    for p in primes():
        if len(report.primes_used) + len(report.primes_rejected) >= _MAX_PRIMES:
            raise HeuristicExhausted(
                f"no verified reconstruction after {_MAX_PRIMES} primes")
        if den % p == 0:
            continue  # ugly prime, skipped silently
        ideal_p = reduce_ideal_mod_p(ideal, p, ordering)
        f_p = poly_map_field(f, ideal_p.ring)
        mu_p = minpoly_def(f_p, ideal_p)
        d_p = mu_p.degree()
        if acc is not None and d_p < acc.degree:
            # this prime's image has too small a degree: bad prime
            report.primes_rejected.append((p, d_p))
            continue
        if acc is None or d_p > acc.degree:
            if acc is not None:
                # everything accumulated so far came from bad primes
                report.primes_rejected.extend(
                    (q, acc.degree) for q in acc.primes)
                report.primes_used = []
            acc = CrtAccumulator(degree=d_p)
        acc.add(mu_p.coeffs, p)
        report.primes_used.append(p)
        if d_p == dim:
            degree_certified = True
        pairs, reliable = acc.reconstruct()
        if not reliable:
            continue
        mu = _lift_uni(mu_p, pairs)
        if mu.is_zero() or not mu.is_monic():
            continue
        if verify:
            if nf_subst(mu, f, gb).is_zero():
                report.verified = True
                report.early_exit = degree_certified
                report.modulus_bits = acc.modulus.bit_length()
                return mu, report
            continue
        report.early_exit = degree_certified
        report.modulus_bits = acc.modulus.bit_length()
        report.unverified_flag = True
        return mu, report
    raise AssertionError("prime stream is infinite")


def minpoly_modular_heuristic(gens, ring: Ring, f: MultiPoly, ordering=None,
                              seed: int = 0, first_primes=(),
                              primes=None) -> tuple[UniPoly, ModularRunReport]:
    """No-GB variant: reduce the raw generators mod p and keep per-degree
    CRT classes; the class of largest degree wins.  The result is not
    verified and can be wrong.

    primes, when given, is the complete (finite) prime supply; the best
    class is reconstructed at exhaustion even if not yet reliable.
    """
    report = ModularRunReport()
    report.unverified_flag = True
    den = 1
    for g in gens:
        den *= den_poly(g)
    if f.ring.field.char == 0:
        den *= den_poly(f)

    classes: dict[int, CrtAccumulator] = {}

    def supply():
        if primes is not None:
            yield from primes
            return
        yield from first_primes
        yield from prime_stream(seed)

    def finish(best):
        pairs, _ = best.reconstruct()
        mu = UniPoly(QQ, [Fraction(a, b) for a, b in pairs])
        report.modulus_bits = best.modulus.bit_length()
        report.primes_rejected = [
            (q, d) for d, c in classes.items() if c is not best
            for q in c.primes]
        return mu, report

    for p in supply():
        if len(report.primes_used) >= _MAX_PRIMES:
            raise HeuristicExhausted(
                f"no reliable reconstruction after {_MAX_PRIMES} primes")
        if den % p == 0:
            continue
        ring_p = Ring(GF(p), ring.names, ordering or ring.order)
        gens_p = [poly_map_field(g, ring_p) for g in gens]
        ideal_p = Ideal(ring_p, gens_p)
        try:
            quotient_basis(reduced_gb(ideal_p))
        except NotZeroDimensional:
            continue
        f_p = poly_map_field(f, ring_p)
        mu_p = minpoly_def(f_p, ideal_p)
        d_p = mu_p.degree()
        cls = classes.get(d_p)
        if cls is None:
            cls = classes[d_p] = CrtAccumulator(degree=d_p)
        cls.add(mu_p.coeffs, p)
        report.primes_used.append(p)
        best = classes[max(classes)]
        if cls is not best:
            continue
        pairs, reliable = best.reconstruct()
        if not reliable or len(best.primes) < 2:
            continue
        mu = _lift_uni(mu_p, pairs)
        if mu.is_zero() or not mu.is_monic():
            continue
        return finish(best)
    if not classes:
        raise HeuristicExhausted("no usable prime in the supplied list")
    return finish(classes[max(classes)])


def minpoly(f: MultiPoly, ideal: Ideal, alg: str | None = None,
            ordering=None, seed: int = 0, verify: bool = True):
    """Dispatch on algorithm name; default def over F_p, modular over Q.

    Returns (UniPoly, ModularRunReport or None).
    """
    if alg is None:
        alg = "modular" if ideal.ring.field.char == 0 else "def"
    if alg == "def":
        return minpoly_def(f, ideal, ordering), None
    if alg == "mat":
        return minpoly_mat(f, ideal, ordering), None
    if alg == "elim":
        return minpoly_elim(f, ideal), None
    if alg == "modular":
        if ideal.ring.field.char != 0:
            return minpoly_def(f, ideal, ordering), None
        return minpoly_modular(f, ideal, ordering, verify=verify, seed=seed)
    if alg == "heuristic":
        if ideal.ring.field.char != 0:
            return minpoly_def(f, ideal, ordering), None
        return minpoly_modular_heuristic(ideal.gens, ideal.ring, f,
                                         ordering, seed=seed)
    raise ValueError(f"unknown algorithm {alg!r}")
