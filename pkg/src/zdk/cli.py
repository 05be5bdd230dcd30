"""Command line interface.

    zdk <command> <file.zdk> [flags]

Commands: gb, minpoly, is-radical, radical, is-maximal, is-primary,
frob-dim, primdec, bench.  Exit codes: 0 success, 2 mathematical
precondition failure, 3 randomized heuristic exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import (
    HeuristicExhausted,
    MathError,
    NonPrimeField,
    ParseError,
    UnknownVariable,
    ZdkError,
)
from .groebner import canonical_gb_text, reduced_gb
from .modular import minpoly
from .structure import (
    MAX_ATTEMPTS,
    frobenius_basis,
    is_maximal,
    is_primary_0dim,
    is_radical_0dim,
    primary_decomposition_0dim,
    radical_0dim,
)
from .zparse import parse_poly, parse_problem

_COMMANDS = ("gb", "minpoly", "is-radical", "radical", "is-maximal",
             "is-primary", "frob-dim", "primdec", "bench")


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="zdk",
        description="exact computations in zero-dimensional quotient rings")
    ap.add_argument("command", choices=_COMMANDS)
    ap.add_argument("file", nargs="?", help="problem file (.zdk)")
    ap.add_argument("--poly", help="element expression (minpoly)")
    ap.add_argument("--alg", choices=("def", "mat", "elim", "modular",
                                      "heuristic"),
                    help="minpoly algorithm (default: def over F_p, "
                         "modular over Q)")
    ap.add_argument("--seed", type=int, default=None,
                    help="RNG seed (default: ZDK_SEED env var, else 0)")
    ap.add_argument("--json", action="store_true", dest="json_mode")
    ap.add_argument("--no-verify", action="store_true")
    ap.add_argument("--max-attempts", type=int, default=MAX_ATTEMPTS)
    ap.add_argument("--suite", choices=("desk", "stretch", "all"),
                    default="desk", help="benchmark suite (bench)")
    ap.add_argument("--case", help="run a single benchmark case (bench)")
    return ap


def _emit(payload: dict, json_mode: bool):
    if json_mode:
        print(json.dumps(payload))
        return
    for line in payload["text"]:
        print(line)


def _load(args):
    if not args.file:
        raise ParseError("a problem file is required")
    with open(args.file, encoding="utf-8") as fh:
        return parse_problem(fh.read())


def _element(args, pf):
    if args.poly:
        return parse_poly(args.poly, pf.ring)
    if pf.elems:
        return next(iter(pf.elems.values()))
    raise ParseError("no element: pass --poly or declare one with elem")


def _cmd_gb(args, seed):
    pf = _load(args)
    gb = reduced_gb(pf.ideal)
    gens = [str(g) for g in gb.elements]
    _emit({"command": "gb", "ordering": str(gb.ordering),
           "generators": gens, "text": gens}, args.json_mode)


def _cmd_minpoly(args, seed):
    pf = _load(args)
    f = _element(args, pf)
    mu, report = minpoly(f, pf.ideal, alg=args.alg, seed=seed,
                         verify=not args.no_verify)
    payload = {"command": "minpoly", "minpoly": str(mu),
               "degree": mu.degree(), "text": [str(mu)]}
    if report is not None:
        payload["report"] = report.summary()
        if report.unverified_flag:
            print("warning: result not verified", file=sys.stderr)
    _emit(payload, args.json_mode)


def _cmd_bool(args, seed, name, fn):
    pf = _load(args)
    val = fn(pf.ideal, seed=seed)
    _emit({"command": name, "result": val,
           "text": ["true" if val else "false"]}, args.json_mode)


def _cmd_radical(args, seed):
    pf = _load(args)
    rad = radical_0dim(pf.ideal, seed=seed)
    gens = [str(g) for g in reduced_gb(rad).elements]
    _emit({"command": "radical", "generators": gens, "text": gens},
          args.json_mode)


def _cmd_frob_dim(args, seed):
    pf = _load(args)
    if pf.ring.field.char == 0:
        raise MathError("frob-dim requires a prime field")
    dim = frobenius_basis(pf.ideal).dim
    _emit({"command": "frob-dim", "dim": dim, "text": [str(dim)]},
          args.json_mode)


def _cmd_primdec(args, seed):
    pf = _load(args)
    comps = primary_decomposition_0dim(pf.ideal, seed=seed,
                                       max_attempts=args.max_attempts)
    blocks = [[str(g) for g in reduced_gb(c).elements] for c in comps]
    text = [f"components: {len(blocks)}"]
    for i, block in enumerate(blocks, 1):
        text.append(f"[{i}]")
        text.extend(block)
    _emit({"command": "primdec", "count": len(blocks),
           "components": blocks, "text": text}, args.json_mode)


def _cmd_bench(args, seed):
    from .bench import run_suite
    ok = run_suite(suite=args.suite, case_id=args.case, seed=seed,
                   json_mode=args.json_mode)
    if not ok:
        sys.exit(1)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("ZDK_SEED", "0"))
    try:
        if args.command == "gb":
            _cmd_gb(args, seed)
        elif args.command == "minpoly":
            _cmd_minpoly(args, seed)
        elif args.command == "is-radical":
            _cmd_bool(args, seed, "is-radical", is_radical_0dim)
        elif args.command == "radical":
            _cmd_radical(args, seed)
        elif args.command == "is-maximal":
            _cmd_bool(args, seed, "is-maximal",
                      lambda ideal, seed: is_maximal(
                          ideal, seed=seed, max_attempts=args.max_attempts))
        elif args.command == "is-primary":
            _cmd_bool(args, seed, "is-primary",
                      lambda ideal, seed: is_primary_0dim(
                          ideal, seed=seed, max_attempts=args.max_attempts))
        elif args.command == "frob-dim":
            _cmd_frob_dim(args, seed)
        elif args.command == "primdec":
            _cmd_primdec(args, seed)
        elif args.command == "bench":
            _cmd_bench(args, seed)
    except (MathError, ParseError, UnknownVariable, NonPrimeField) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except HeuristicExhausted as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ZdkError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
