#!/usr/bin/env python3
"""Build and verify every feasible cycle length for a list of plane orders."""

import argparse
import sys
import time

from planegraphs.cycles import ag_cycle, cyclic_plane, pg_cycle
from planegraphs.graphs import verify_embedding
from planegraphs.plane import ag_from_field, pg_from_field


def sweep(q: int, model: str) -> tuple:
    if model == "ag":
        plane, top = ag_from_field(q), q * q
        build = ag_cycle
    else:
        plane, top = pg_from_field(q), q * q + q + 1
        build = pg_cycle
    models = {}
    for k in range(3, top + 1):
        chain = build(q, k)
        target = cyclic_plane(q) if chain.model == "CYCLIC" else plane
        emb = chain.to_embedding()
        rep = verify_embedding(emb.graph, emb, target)
        if not rep.ok:
            raise SystemExit(f"verification failed at q={q} k={k}: {rep.violations}")
        models[chain.model] = models.get(chain.model, 0) + 1
    return top - 2, models


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qs", default="3,4,5,7,8,9,11,13")
    ap.add_argument("--plane", choices=["ag", "pg", "both"], default="both")
    args = ap.parse_args()

    models = ["ag", "pg"] if args.plane == "both" else [args.plane]
    for q in (int(s) for s in args.qs.split(",")):
        for model in models:
            t0 = time.time()
            count, models_seen = sweep(q, model)
            tag = " ".join(f"{m}:{c}" for m, c in sorted(models_seen.items()))
            print(f"{model}:{q:3d}  {count:4d} cycles verified  "
                  f"{time.time() - t0:6.2f}s  [{tag}]")
    return 0


if __name__ == "__main__":
    sys.exit(main())
