"""Benchmark corpus: named zero-dimensional problems with known minimal
polynomial degrees, maximality flags and primary component counts.

Each case builds its ideal lazily; checks are tagged desk (minutes on a
laptop) or stretch (potentially an hour).  Run via `zdk bench`.
"""

from __future__ import annotations

import heapq
import json
import random
import time
from dataclasses import dataclass
from typing import Callable

from .fields import GF, QQ
from .groebner import Ideal, ReducedGB, intersect
from .lindep import LinDepMill
from .modular import minpoly
from .poly import DEGREVLEX, MultiPoly, Ring, pp_divides
from .structure import is_maximal, primary_decomposition_0dim
from .zparse import parse_poly


@dataclass(frozen=True)
class Check:
    kind: str  # minpoly-deg | maximal | ncomp
    expected: object
    suite: str = "desk"
    elem: str | None = None  # element expression for minpoly-deg


@dataclass(frozen=True)
class BenchCase:
    id: str
    title: str
    build: Callable[[], Ideal]
    checks: tuple


def _ring(field, names):
    return Ring(field, tuple(names), DEGREVLEX)


def _ideal(ring, exprs):
    return Ideal(ring, [parse_poly(e, ring) for e in exprs])


def _elem_sym(ring):
    """e_1, ..., e_n in the ring's variables."""
    es = [ring.one()]
    for v in ring.vars():
        new = [ring.one()]
        for k in range(1, len(es) + 1):
            prev = es[k] if k < len(es) else ring.zero()
            new.append(prev + es[k - 1] * v)
        es = new
    return es[1:]


def _splitting_ideal(field, n, shifts):
    """Ideal presenting the splitting algebra of a degree-n polynomial:
    generators e_i + shifts[i]."""
    ring = _ring(field, (f"a{i}" for i in range(1, n + 1)))
    gens = []
    for i, e in enumerate(_elem_sym(ring), 1):
        c = shifts.get(i, 0)
        gens.append(e + ring.const(c) if c else e)
    return Ideal(ring, gens)


def _eval_pp(pp, point, field):
    v = field.one
    for e, x in zip(pp, point):
        if e:
            v = field.mul(v, field.coerce(x) ** e if field.char == 0
                          else pow(int(x) % field.char, e, field.char))
    return v


def vanishing_ideal(ring, points) -> Ideal:
    """Reduced GB of the ideal of all polynomials vanishing at the given
    distinct points, by sigma-increasing evaluation and interpolation."""
    fld = ring.field
    mill = LinDepMill(fld, len(points))
    key = ring.order.key
    fed = []  # monomials in feed order, matching the mill's indexing
    gens = []
    lts = []
    start = (0,) * ring.nvars
    heap = [(key(start), start)]
    seen = {start}
    while heap:
        _, t = heapq.heappop(heap)
        if any(pp_divides(lt, t) for lt in lts):
            continue
        comb = mill.feed([_eval_pp(t, pt, fld) for pt in points])
        if comb is None:
            fed.append(t)
            for i in range(ring.nvars):
                u = tuple(t[j] + (j == i) for j in range(ring.nvars))
                if u not in seen:
                    seen.add(u)
                    heapq.heappush(heap, (key(u), u))
            continue
        terms = {t: fld.one}
        for c, u in zip(comb, fed):
            if c:
                terms[u] = fld.sub(terms.get(u, fld.zero), c)
        fed.append(t)
        gens.append(MultiPoly(ring, {pp: c for pp, c in terms.items()
                                     if c != fld.zero}))
        lts.append(t)
    ideal = Ideal(ring, list(gens))
    ideal.install_gb(ReducedGB(ring, tuple(gens)))
    return ideal


def _random_points(n, nvars, seed):
    rng = random.Random(seed)
    pts = set()
    while len(pts) < n:
        pts.add(tuple(rng.randint(-9999, 9999) for _ in range(nvars)))
    return sorted(pts)


# ---------------------------------------------------------------------------
# case builders
# ---------------------------------------------------------------------------

def _charp_deg500():
    ring = _ring(GF(101), "xyzt")
    return _ideal(ring, [
        "x*y*z*t+83y^3+73x^2-85z^2-437t",
        "y^3*z*t+z-t",
        "t^4+z*t^2-324z^3+94x^2+76y",
        "x^11*z+26t^3+625y",
    ])


def _charp_split6():
    return _splitting_ideal(GF(101), 6, {5: -7, 6: -1})


def _randomp_32003():
    ring = _ring(GF(32003), "xyzt")
    return _ideal(ring, [
        "x*y*z*t^5+x^3+73y^2-z^2-2t",
        "x^6*z*t+z-t",
        "z*t^2+7x*y^2-34z^3-2t^4",
        "y^4*z+x+26t^3",
    ])


def _sospetto():
    ring = _ring(GF(101), "xyz")
    g = parse_poly("x^7-y-3z", ring)
    J1 = Ideal(ring, [g * g,
                      parse_poly("x*y^5-7z^2-2", ring),
                      parse_poly("y*z^6-x-z+14", ring)])
    J2 = _ideal(ring, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"])
    return intersect(J1, J2)


def _largeci_23():
    ring = _ring(GF(23), "xyz")
    return _ideal(ring, [
        "x^16+8x^15-6x^14-8x^13+4x^12-4x^11+5x^10+8x^9+5x^8-4x^7"
        "+5x^6+2x^5-7x^4+4x^3+10x^2+3x+8",
        "y^5-7y^4+2y^3+11y^2-y+5",
        "z^11+9z^10-9z^9+7z^8-8z^7-4z^6+9z^5+z^4-5z^3+7z^2+z+10",
    ])


def _qq_rand():
    ring = _ring(QQ, "xyzt")
    return _ideal(ring, [
        "x*y*z*t+83x^3+73y^2-85z^2-437t",
        "x^3*z*t+z-t",
        "z*t^2+76x+94y^2-324z^3-255t^4",
        "y^2*z+625x+26t^3",
    ])


def _qq_ci1():
    ring = _ring(QQ, "xyzt")
    return _ideal(ring, [
        "x^4+83x^3+73y^2-85z^2-437t",
        "y^3-x",
        "z^3+z-t",
        "t^3-324z^2+94y^2+76x",
    ])


def _qq_ci2():
    ring = _ring(QQ, "xyzt")
    return _ideal(ring, [
        "x^4+83x^3+73y^2-85z^2-437t",
        "y^3-z-t",
        "z^3+z-t",
        "t^4-12z^2+77y^2+15x",
    ])


def _qq_split5():
    return _splitting_ideal(QQ, 5, {4: 1, 5: -2})


def _qq_split6():
    return _splitting_ideal(QQ, 6, {5: -7, 6: -1})


def _qq_points87():
    ring = _ring(QQ, "xyz")
    return vanishing_ideal(ring, _random_points(87, 3, seed=87))


def _qq_largeci():
    ring = _ring(QQ, "xyz")
    return _ideal(ring, [
        "x^7-y-3z",
        "x*y^5-5057z^2-2",
        "y*z^6-x-z+14",
    ])


_J2_EXPRS = ("x^2-y-3z", "x*y-5z^2-12", "z^3-x-y+4")


def _twomax_hard():
    ring = _ring(QQ, "xyz")
    J1 = _ideal(ring, ["x^5-y-3z", "x*y^5-5057z^2-2", "y*z^5-x-z+14"])
    return intersect(J1, _ideal(ring, _J2_EXPRS))


def _twomax_simple():
    ring = _ring(QQ, "xyz")
    J1 = _ideal(ring, ["x^3-y-3z", "x*y^3-5057z^2-2", "y*z^4-x-z+14"])
    return intersect(J1, _ideal(ring, _J2_EXPRS))


CASES = (
    BenchCase("charp-deg500", "random ideal over F_101", _charp_deg500, (
        Check("minpoly-deg", 500, "stretch", "x^16+12y^20-z^30"),
        Check("ncomp", 5, "stretch"),
    )),
    BenchCase("charp-split6", "splitting algebra of x^6-7x+1 over F_101",
              _charp_split6, (
        Check("minpoly-deg", 720, "stretch",
              "a1+2a2+3a3+4a4+5a5+6a6"),
        Check("ncomp", 144, "stretch"),
    )),
    BenchCase("32003-randomp", "random ideal over F_32003",
              _randomp_32003, (
        Check("minpoly-deg", 590, "stretch", "x*t^2+5z"),
        Check("ncomp", 11, "stretch"),
    )),
    BenchCase("sospetto", "intersection with a squared component over F_101",
              _sospetto, (
        Check("minpoly-deg", 462, "stretch", "x^2-3x*y-z"),
        Check("ncomp", 6, "stretch"),
    )),
    BenchCase("23largeCI", "complete intersection over F_23", _largeci_23, (
        Check("minpoly-deg", 880, "stretch", "3x-2y+5z"),
        Check("maximal", True, "stretch"),
        Check("ncomp", 1, "stretch"),
    )),
    BenchCase("QQ-rand", "random ideal over Q", _qq_rand, (
        Check("minpoly-deg", 116, "desk", "t^2+5z"),
        Check("ncomp", 2, "stretch"),
    )),
    BenchCase("QQ-CI1", "complete intersection over Q", _qq_ci1, (
        Check("minpoly-deg", 107, "desk", "x"),
        Check("minpoly-deg", 108, "desk", "2x+3y-4z+12t"),
        Check("ncomp", 2, "stretch"),
    )),
    BenchCase("QQ-CI2", "complete intersection over Q", _qq_ci2, (
        Check("minpoly-deg", 144, "desk", "x-3y-12z+62t"),
        Check("ncomp", 2, "stretch"),
    )),
    BenchCase("QQ-split5", "splitting algebra of x^5-x-2 over Q",
              _qq_split5, (
        Check("minpoly-deg", 120, "desk", "a1+2a2+3a3+4a4+5a5"),
        Check("maximal", True, "desk"),
        Check("ncomp", 1, "stretch"),
    )),
    BenchCase("QQ-split6", "splitting algebra of x^6-7x+1 over Q",
              _qq_split6, (
        Check("minpoly-deg", 720, "stretch",
              "a1+2a2+3a3+4a4+5a5+6a6"),
    )),
    BenchCase("QQ-87points", "vanishing ideal of 87 integer points",
              _qq_points87, (
        Check("minpoly-deg", 87, "desk", "44x+3y-z"),
        Check("ncomp", 87, "stretch"),
    )),
    BenchCase("QQ-largeCI", "complete intersection over Q", _qq_largeci, (
        Check("minpoly-deg", 230, "stretch", "x"),
        Check("ncomp", 1, "stretch"),
    )),
    BenchCase("twomaxhard", "intersection of two maximal ideals over Q",
              _twomax_hard, (
        Check("minpoly-deg", 149, "desk", "7x-5y+2z"),
        Check("ncomp", 2, "stretch"),
    )),
    BenchCase("twomaxsimple", "intersection of two maximal ideals over Q",
              _twomax_simple, (
        Check("minpoly-deg", 55, "desk", "7x-5y+2z"),
        Check("ncomp", 2, "desk"),
    )),
)


def _run_check(ideal, check, seed):
    if check.kind == "minpoly-deg":
        f = parse_poly(check.elem, ideal.ring)
        mu, _ = minpoly(f, ideal, seed=seed)
        return mu.degree()
    if check.kind == "maximal":
        return is_maximal(ideal, seed=seed)
    if check.kind == "ncomp":
        return len(primary_decomposition_0dim(ideal, seed=seed))
    raise ValueError(f"unknown check kind {check.kind!r}")


def run_suite(suite="desk", case_id=None, seed=0, json_mode=False) -> bool:
    wanted = {"desk"} if suite == "desk" else (
        {"stretch"} if suite == "stretch" else {"desk", "stretch"})
    results = []
    all_ok = True
    for case in CASES:
        if case_id is not None and case.id != case_id:
            continue
        checks = [c for c in case.checks if c.suite in wanted]
        if not checks:
            continue
        t0 = time.perf_counter()
        ideal = case.build()
        build_s = time.perf_counter() - t0
        for check in checks:
            t0 = time.perf_counter()
            got = _run_check(ideal, check, seed)
            secs = time.perf_counter() - t0
            ok = got == check.expected
            all_ok = all_ok and ok
            results.append({
                "case": case.id, "check": check.kind, "elem": check.elem,
                "expected": check.expected, "got": got,
                "ok": ok, "seconds": round(secs, 2),
                "build_seconds": round(build_s, 2),
            })
            build_s = 0.0
            if not json_mode:
                tag = "pass" if ok else "FAIL"
                elem = f" {check.elem}" if check.elem else ""
                print(f"[{case.id}] {check.kind}{elem}: expected "
                      f"{check.expected}, got {got} .. {tag} ({secs:.1f}s)",
                      flush=True)
    if json_mode:
        print(json.dumps({"suite": suite, "results": results,
                          "ok": all_ok}))
    elif not results:
        print("no matching cases")
    return all_ok
