#!/usr/bin/env python3
# Print the gear construction route for each (q, n) cell.

import argparse
import sys
from collections import Counter

from planegraphs.gf import prime_powers_in
from planegraphs.graphs import ImpossibleDegree
from planegraphs.wheelgear import ConstructionFailed, gear_plan

SHORT = {
    "ORACLE": "orc",
    "FROM_WHEEL": "whl",
    "PATHS_EVEN": "pev",
    "PATHS_ODD": "pod",
    "MAX_EVEN": "mxe",
    "MAX_ODD": "mxo",
}


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--q-min", type=int, default=5)
    ap.add_argument("--q-max", type=int, default=16)
    args = ap.parse_args()

    qs = prime_powers_in(args.q_min, args.q_max)
    n_top = max(qs) + 1
    tally: Counter = Counter()
    print("  q\\n " + "".join(f"{n:>5}" for n in range(3, n_top + 1)))
    for q in qs:
        row = [f"{q:>4} "]
        for n in range(3, n_top + 1):
            try:
                plan = gear_plan(q, n)
                cell = SHORT[plan.route]
                tally[plan.route] += 1
            except ImpossibleDegree:
                cell = "."
            except ConstructionFailed:
                cell = "FAIL"
                tally["FAIL"] += 1
            row.append(f"{cell:>5}")
        print("".join(row))
    print("routes: " + ", ".join(f"{r}={c}" for r, c in tally.most_common()))
    return 1 if tally.get("FAIL") else 0


if __name__ == "__main__":
    sys.exit(main())
