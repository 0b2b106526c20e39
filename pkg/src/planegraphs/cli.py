"""Command line front end.

Subcommands: field, plane, cycle, wheel, gear, oracle, verify, hypj.
Artifacts (plane files, embedding files, certificate streams) go to files;
stdout carries summary lines only.  Exit codes: 0 success, 1 verification
or construction failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .cycles import NoCertificate, ag_cycle, cyclic_plane, pg_cycle
from .gf import (
    certificate_line,
    first_primitive,
    hypothesis_j_search,
    is_prime,
    make_field,
    prime_power,
    prime_powers_in,
)
from .graphs import (
    ImpossibleDegree,
    cycle_graph,
    gear_graph,
    graph_from_json,
    make_embedding,
    read_embedding,
    verify_embedding,
    wheel_graph,
    write_embedding,
)
from .oracle import DEFAULT_BUDGET, exists_embedding
from .plane import (
    GenericPlane,
    ag_from_field,
    check_plane_axioms,
    load_plane,
    pg_from_field,
    save_plane,
)
from .wheelgear import ConstructionFailed, gear_plan, wheel_plan


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _fail(msg: str) -> int:
    print(f"fail: {msg}", file=sys.stderr)
    return 1


# ---------------------------------------------------------------------------
# field


def _cmd_field(args) -> int:
    if args.mode != "info":
        return _usage_error(f"unknown field mode {args.mode!r}")
    pp = prime_power(args.q)
    if pp is None:
        return _usage_error(f"q={args.q} is not a prime power")
    spec = make_field(*pp)
    doc = {
        "q": spec.q,
        "p": spec.p,
        "a": spec.a,
        "modulus": list(spec.modulus),
        "first_primitive": first_primitive(spec).enc,
    }
    print(json.dumps(doc, separators=(",", ":")))
    return 0


# ---------------------------------------------------------------------------
# plane


def _cmd_plane(args) -> int:
    if args.mode == "export":
        if args.q is None or args.out is None:
            return _usage_error("plane export needs --q and --out")
        if prime_power(args.q) is None:
            return _usage_error(f"q={args.q} is not a prime power")
        builder = {"pg": pg_from_field, "ag": ag_from_field}[args.model]
        view = builder(args.q).to_generic()
        save_plane(view.plane, args.out)
        print(f"{args.model}:{args.q} -> {args.out} "
              f"({view.plane.n_points} points, {len(view.plane.lines)} lines)")
        return 0
    if args.mode == "check":
        if not args.file:
            return _usage_error("plane check needs a file argument")
        plane = load_plane(args.file)
        rep = check_plane_axioms(plane)
        status = "pass" if rep.ok else "fail"
        print(f"{status}: {rep.points} points, {rep.lines} lines, "
              f"line size {rep.line_size}, {len(rep.violations)} violations")
        for v in rep.violations[:10]:
            print(f"  {v}")
        return 0 if rep.ok else 1
    return _usage_error(f"unknown plane mode {args.mode!r}")


# ---------------------------------------------------------------------------
# cycle


def _build_cycle(q: int, k: int, model: str):
    return (ag_cycle if model == "ag" else pg_cycle)(q, k)


def _cmd_cycle(args) -> int:
    if prime_power(args.q) is None:
        return _usage_error(f"q={args.q} is not a prime power")
    q = args.q
    if args.mode == "sweep":
        top = q * q if args.plane == "ag" else q * q + q + 1
        out_dir = args.out_dir or f"cycle_sweep_{args.plane}_q{q}"
        os.makedirs(out_dir, exist_ok=True)
        rows = []
        for k in range(3, top + 1):
            chain = _build_cycle(q, k, args.plane)
            emb = chain.to_embedding()
            path = os.path.join(out_dir, f"c{k}.json")
            write_embedding(emb, path)
            rows.append((k, chain.length))
        for k, length in rows:
            print(f"{k:5d} {length:5d} verified")
        print(f"{len(rows)} cycles -> {out_dir}")
        return 0
    if args.k is None:
        return _usage_error("cycle needs --k (or the sweep mode)")
    try:
        chain = _build_cycle(q, args.k, args.plane)
    except ValueError as e:
        return _usage_error(str(e))
    emb = chain.to_embedding()
    out = args.out or f"cycle_{args.plane}_q{q}_k{args.k}.json"
    write_embedding(emb, out)
    print(f"C_{args.k} in {args.plane}:{q} verified -> {out}")
    return 0


# ---------------------------------------------------------------------------
# wheel / gear


def _cmd_wheel(args) -> int:
    if prime_power(args.q) is None:
        return _usage_error(f"q={args.q} is not a prime power")
    try:
        plan = wheel_plan(args.q, args.n)
    except (ImpossibleDegree, ValueError) as e:
        return _usage_error(str(e))
    except ConstructionFailed as e:
        return _fail(str(e))
    out = args.out or f"wheel_q{args.q}_n{args.n}.json"
    write_embedding(plan.embedding, out)
    print(f"W_{args.n} in pg:{args.q} via {plan.route} -> {out}")
    return 0


def _cmd_gear(args) -> int:
    if args.mode == "sweep":
        return _gear_sweep(args)
    if args.q is None or args.n is None:
        return _usage_error("gear needs --q and --n (or the sweep mode)")
    if prime_power(args.q) is None:
        return _usage_error(f"q={args.q} is not a prime power")
    try:
        plan = gear_plan(args.q, args.n)
    except (ImpossibleDegree, ValueError) as e:
        return _usage_error(str(e))
    except ConstructionFailed as e:
        return _fail(str(e))
    out = args.out or f"gear_q{args.q}_n{args.n}.json"
    write_embedding(plan.embedding, out)
    print(f"G_{args.n} in pg:{args.q} via {plan.route} -> {out}")
    return 0


def _gear_sweep(args) -> int:
    q_max = args.q_max
    qs = prime_powers_in(2, q_max)
    n_max = q_max + 1
    rows = []
    for q in qs:
        cells = []
        for n in range(3, n_max + 1):
            if n > q + 1:
                cells.append(".")
                continue
            try:
                cells.append(gear_plan(q, n).route)
            except ConstructionFailed:
                cells.append("impossible")
        rows.append((q, cells))
    width = max(len("impossible"), 10)
    header = "   q " + " ".join(f"{n:>{width}d}" for n in range(3, n_max + 1))
    print(header)
    lines = [header]
    for q, cells in rows:
        line = f"{q:4d} " + " ".join(f"{c:>{width}s}" for c in cells)
        print(line)
        lines.append(line)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# oracle / verify


def _parse_graph_ref(ref: str):
    if ref.endswith(".json"):
        with open(ref) as fh:
            return graph_from_json(json.load(fh))
    kind, _, param = ref.partition(":")
    if not param.isdigit():
        raise ValueError(f"bad graph reference {ref!r} (want kind:n or a .json file)")
    n = int(param)
    builder = {"cycle": cycle_graph, "wheel": wheel_graph, "gear": gear_graph}.get(kind)
    if builder is None:
        raise ValueError(f"unknown graph kind {kind!r}")
    return builder(n)


def _parse_plane_ref(ref: str):
    """Returns (generic_plane, view, coord, model, q); the view and the
    coordinate plane are None except for pg/ag references."""
    if ref.endswith(".json"):
        plane = load_plane(ref)
        return plane, None, None, "GENERIC", plane.q
    kind, _, param = ref.partition(":")
    if not param.isdigit():
        raise ValueError(f"bad plane reference {ref!r} (want model:q or a .json file)")
    q = int(param)
    if prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")
    if kind == "cyclic":
        return cyclic_plane(q), None, None, "CYCLIC", q
    if kind in ("pg", "ag"):
        builder = {"pg": pg_from_field, "ag": ag_from_field}[kind]
        coord = builder(q)
        view = coord.to_generic()
        return view.plane, view, coord, kind.upper(), q
    raise ValueError(f"unknown plane model {kind!r}")


def _cmd_oracle(args) -> int:
    try:
        graph = _parse_graph_ref(args.graph)
        plane, view, coord, model, q = _parse_plane_ref(args.plane)
    except (ValueError, OSError) as e:
        return _usage_error(str(e))
    res = exists_embedding(graph, plane, budget=args.budget)
    doc = {"status": res.status, "expansions": res.expansions}
    if res.status == "found":
        emb = res.embedding
        if view is not None:
            imgs = [view.point_triples[i] for i in emb.vertex_images]
            emb = make_embedding(model, q, graph, imgs, plane=coord)
        elif model == "CYCLIC":
            # generic point ids on the cyclic plane are the residues themselves
            emb = make_embedding(model, q, graph, emb.vertex_images, plane=plane)
        out = args.out or "oracle_embedding.json"
        write_embedding(emb, out)
        doc["out"] = out
    print(json.dumps(doc, separators=(",", ":")))
    return 0


def _cmd_verify(args) -> int:
    try:
        emb = read_embedding(args.file)
    except (ValueError, OSError, KeyError) as e:
        return _usage_error(f"cannot read embedding: {e}")
    if emb.model == "GENERIC":
        if not args.plane:
            return _usage_error("generic embeddings need --plane pointing at the plane file")
        plane = load_plane(args.plane)
    elif emb.model == "CYCLIC":
        plane = cyclic_plane(emb.q)
    elif emb.model == "AG":
        plane = ag_from_field(emb.q)
    else:
        plane = pg_from_field(emb.q)
    rep = verify_embedding(emb.graph, emb, plane)
    if rep.ok:
        print(f"pass: {emb.graph.kind} on {emb.model}:{emb.q}, "
              f"{emb.graph.n_vertices} vertices, {len(emb.graph.edges)} lines")
        return 0
    print(f"fail: {len(rep.violations)} violations")
    for v in rep.violations[:10]:
        print(f"  {v}")
    return 1


# ---------------------------------------------------------------------------
# hypj


def _hypj_line(q: int) -> str:
    return certificate_line(q, hypothesis_j_search(q))


def _cmd_hypj(args) -> int:
    if args.mode == "sweep":
        if args.min < 3:
            return _usage_error("sweep needs --min >= 3")
        qs = prime_powers_in(args.min, args.max)
        if args.primes_only:
            qs = [q for q in qs if is_prime(q)]
        if args.jobs > 1 and len(qs) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                lines = list(pool.map(_hypj_line, qs, chunksize=64))
        else:
            lines = [_hypj_line(q) for q in qs]
        certified = sum(1 for l in lines if '"NOT_FOUND"' not in l)
        missing = [q for q, l in zip(qs, lines) if '"NOT_FOUND"' in l]
        if args.out:
            with open(args.out, "w") as fh:
                for line in lines:
                    fh.write(line + "\n")
        else:
            for line in lines:
                print(line)
        print(f"{len(qs)} prime powers, {certified} certificates, "
              f"not found: {missing if missing else 'none'}")
        return 0
    if args.q is None:
        return _usage_error("hypj needs --q (or the sweep mode)")
    if prime_power(args.q) is None or args.q < 3:
        return _usage_error(f"q={args.q} is not a prime power >= 3")
    print(_hypj_line(args.q))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="planegraphs")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="finite field reports")
    p.add_argument("mode", choices=["info"])
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_field)

    p = sub.add_parser("plane", help="export or check plane files")
    p.add_argument("mode", choices=["export", "check"])
    p.add_argument("file", nargs="?", help="plane file (check mode)")
    p.add_argument("--q", type=int)
    p.add_argument("--model", choices=["pg", "ag"], default="pg")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_plane)

    p = sub.add_parser("cycle", help="build cycle embeddings")
    p.add_argument("mode", nargs="?", choices=["sweep"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--plane", choices=["ag", "pg"], default="ag")
    p.add_argument("--out")
    p.add_argument("--out-dir")
    p.set_defaults(func=_cmd_cycle)

    p = sub.add_parser("wheel", help="build a wheel embedding")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_wheel)

    p = sub.add_parser("gear", help="build gear embeddings")
    p.add_argument("mode", nargs="?", choices=["sweep"])
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q-max", type=int, default=16)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gear)

    p = sub.add_parser("oracle", help="exhaustive embedding search")
    p.add_argument("--graph", required=True, help="cycle:K | wheel:N | gear:N | file.json")
    p.add_argument("--plane", required=True, help="pg:Q | ag:Q | cyclic:Q | file.json")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="re-verify an embedding file")
    p.add_argument("file")
    p.add_argument("--plane", help="plane file for generic embeddings")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("hypj", help="primitive-pair certificates")
    p.add_argument("mode", nargs="?", choices=["sweep"])
    p.add_argument("--q", type=int)
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--primes-only", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_hypj)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoCertificate as e:
        return _fail(str(e))
    except ConstructionFailed as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())
