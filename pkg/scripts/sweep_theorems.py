"""Closed form against brute force, item by item, with per-item timing.

    python3 scripts/sweep_theorems.py HH --max-rank 3
"""
import argparse
import time
from collections import defaultdict

from greenring.green import DEFAULT_ETAS, product_bruteforce, product_closed, theorem_pairs
from greenring.labels import format_label


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("algebra", choices=("mabar", "DH4", "HH"))
    ap.add_argument("--max-rank", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    stats = defaultdict(lambda: [0, 0, 0.0])
    for item, a, b in theorem_pairs(args.algebra, args.max_rank, DEFAULT_ETAS):
        t0 = time.perf_counter()
        ok = product_bruteforce(args.algebra, a, b, args.seed).terms == product_closed(args.algebra, a, b).terms
        s = stats[item]
        s[0] += 1
        s[1] += ok
        s[2] += time.perf_counter() - t0
        if not ok:
            print(f"mismatch in item {item}: {format_label(a)} * {format_label(b)}")
    for item in sorted(stats, key=lambda k: int(k)):
        n, ok, t = stats[item]
        print(f"item {item:>2}: {ok}/{n} agree, {t:.1f}s ({t / n * 1000:.0f} ms per instance)")


if __name__ == "__main__":
    main()
