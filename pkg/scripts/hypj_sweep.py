#!/usr/bin/env python3
"""Sweep primitive-pair certificates over a prime power range and time it."""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from planegraphs.cli import _hypj_line
from planegraphs.gf import prime_powers_in


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min", type=int, default=4)
    ap.add_argument("--max", type=int, default=10_000)
    ap.add_argument("--jobs", type=int, default=8)
    ap.add_argument("--out", help="write one JSON line per q")
    args = ap.parse_args()

    qs = prime_powers_in(args.min, args.max)
    t0 = time.time()
    if args.jobs > 1 and len(qs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            lines = list(pool.map(_hypj_line, qs, chunksize=64))
    else:
        lines = [_hypj_line(q) for q in qs]
    dt = time.time() - t0

    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    missing = [q for q, l in zip(qs, lines) if '"NOT_FOUND"' in l]
    print(f"# {len(qs)} prime powers, {len(qs) - len(missing)} certified, "
          f"{dt:.2f}s with {args.jobs} jobs", file=sys.stderr)
    if missing:
        print(f"# not found: {missing}", file=sys.stderr)
    return 1 if missing else 0


if __name__ == "__main__":
    sys.exit(main())
