"""Run every verification suite and write one JSON report per suite.

    python3 scripts/run_all_suites.py --out runs/ --max-rank 4
"""
import argparse
import json
import pathlib
import sys
from fractions import Fraction

from greenring.suites import SUITES, SuiteConfig, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("runs"))
    ap.add_argument("--max-rank", type=int, default=4)
    ap.add_argument("--etas", default="1,2,-1")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("suites", nargs="*", default=sorted(SUITES))
    args = ap.parse_args()

    cfg = SuiteConfig(args.max_rank, tuple(Fraction(e) for e in args.etas.split(",")), args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for name in args.suites:
        rep = run_suite(name, cfg)
        (args.out / f"{name}.json").write_text(json.dumps(rep.to_json(), indent=2))
        print(f"{name:16s} {rep.passed:6d}/{len(rep.cases):<6d} {rep.duration:8.1f}s",
              "ok" if rep.ok else "FAILED", flush=True)
        all_ok &= rep.ok
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
