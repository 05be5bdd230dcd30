#!/usr/bin/env python3
"""Run the named benchmark corpus outside the CLI.

Examples:
    python scripts/run_bench.py
    python scripts/run_bench.py --suite stretch --case charp-split6
    python scripts/run_bench.py --suite all --json
"""

import argparse
import sys

from zdk.bench import CASES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", choices=("desk", "stretch", "all"),
                    default="desk")
    ap.add_argument("--case", choices=[c.id for c in CASES], default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--list", action="store_true",
                    help="list case ids and exit")
    args = ap.parse_args()
    if args.list:
        for c in CASES:
            tags = sorted({ch.suite for ch in c.checks})
            print(f"{c.id:16s} {'/'.join(tags):13s} {c.title}")
        return 0
    ok = run_suite(suite=args.suite, case_id=args.case, seed=args.seed,
                   json_mode=args.json)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
