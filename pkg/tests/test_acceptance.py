"""Top-level acceptance run: ten criteria, one report line each.

Each test prints exactly one "criterion N: PASS/FAIL ..." line outside the
capture machinery so the summary is visible in the run log, then asserts
the outcome.
"""

import filecmp
import os
import time
from concurrent.futures import ProcessPoolExecutor

import pytest

from planegraphs.cli import _hypj_line, main
from planegraphs.cycles import (
    ag_cycle,
    base_path,
    cycle_q2,
    cyclic_plane,
    labeling_for,
    long_cycle,
    path_closed_form,
    pg_cycle,
    singer_difference_set,
)
from planegraphs.gf import element_order, hypothesis_j_search, prime_powers_in
from planegraphs.graphs import (
    ImpossibleDegree,
    cycle_graph,
    gear_graph,
    verify_embedding,
    wheel_graph,
)
from planegraphs.oracle import exists_embedding
from planegraphs.plane import ag_from_field, pg_from_field
from planegraphs.wheelgear import ConstructionFailed, gear, gear_plan, wheel, wheel_plan

PANCYCLIC_QS = (4, 5, 7, 8, 9, 11, 13)


@pytest.fixture
def report(capsys):
    def _r(n: int, ok: bool, detail: str) -> None:
        verdict = "PASS" if ok else "FAIL"
        with capsys.disabled():
            print(f"\ncriterion {n}: {verdict} {detail}", flush=True)
    return _r


def _chain_ok(chain, plane) -> bool:
    emb = chain.to_embedding()
    return verify_embedding(emb.graph, emb, plane).ok


def test_criterion_01_certificate_sweep(report):
    t0 = time.time()
    qs = prime_powers_in(4, 10_000)
    with ProcessPoolExecutor(max_workers=8) as pool:
        lines = list(pool.map(_hypj_line, qs, chunksize=64))
    missing = [q for q, l in zip(qs, lines) if '"NOT_FOUND"' in l]
    three = hypothesis_j_search(3)
    elapsed = time.time() - t0
    ok = len(qs) == 1278 and not missing and three is None and elapsed < 300
    report(1, ok, f"{len(qs)} prime powers in [4, 10000] certified, "
                   f"order 3 not found, {elapsed:.1f}s")
    assert ok, (len(qs), missing[:5], three, elapsed)


def test_criterion_02_affine_pancyclicity(report):
    t0 = time.time()
    bad = []
    for q in PANCYCLIC_QS:
        plane = ag_from_field(q)
        for k in range(3, q * q + 1):
            chain = ag_cycle(q, k)
            if chain.length != k or not _chain_ok(chain, plane):
                bad.append((q, k))
    plane3 = ag_from_field(3)
    for k in range(3, 10):  # order 3 comes from the oracle route
        if not _chain_ok(ag_cycle(3, k), plane3):
            bad.append((3, k))
    elapsed = time.time() - t0
    ok = not bad and elapsed < 120
    report(2, ok, f"affine cycles C_3..C_q2 for q in {PANCYCLIC_QS} "
                   f"plus the order-3 table, {elapsed:.1f}s")
    assert ok, (bad[:5], elapsed)


def test_criterion_03_projective_pancyclicity(report):
    t0 = time.time()
    bad = []
    for q in PANCYCLIC_QS:
        plane = pg_from_field(q)
        rung = q * q + q + 1
        for k in range(3, rung + 1):
            chain = pg_cycle(q, k)
            target = cyclic_plane(q) if chain.model == "CYCLIC" else plane
            if chain.length != k or not _chain_ok(chain, target):
                bad.append((q, k))
    plane3 = pg_from_field(3)
    for k in range(3, 14):
        chain = pg_cycle(3, k)
        target = cyclic_plane(3) if chain.model == "CYCLIC" else plane3
        if not _chain_ok(chain, target):
            bad.append((3, k))
    elapsed = time.time() - t0
    ok = not bad and elapsed < 180
    report(3, ok, f"projective cycles C_3..C_{{q2+q+1}} for q in {PANCYCLIC_QS} "
                   f"with the full-length rung, {elapsed:.1f}s")
    assert ok, (bad[:5], elapsed)


def test_criterion_04_long_cycle_law(report):
    bad = []
    for q in prime_powers_in(4, 49):
        lab = labeling_for(q)
        chain = long_cycle(q, lab)
        order = element_order(base_path(q, lab).multiplier)
        if chain.length != (q + 1) * order or chain.length != q * q - 1:
            bad.append((q, "length"))
        if not _chain_ok(chain, chain.default_plane()):
            bad.append((q, "verify"))
        cq2 = cycle_q2(q)
        pts = set(cq2.points)
        if len(cq2.points) != q * q or pts != set(ag_from_field(q).points()):
            bad.append((q, "coverage"))
    ok = not bad
    report(4, ok, "long cycle length (q+1)*ord = q^2-1 and full q^2 coverage "
                   "for every certified q <= 49")
    assert ok, bad


def test_criterion_05_closed_form_adjudication(report):
    bad = []
    qs = [q for q in prime_powers_in(5, 49) if q % 2 == 1]
    for q in qs:
        lab = labeling_for(q)
        spec = lab.spec
        alpha = lab.alpha
        for b in range(1, q):
            beta = spec.element(b)
            path = base_path(q, lab, b)
            for i in range(q):
                if path_closed_form(q, alpha, beta, i) != path.points[i + 1]:
                    bad.append((q, b, i))
            if path_closed_form(q, alpha, beta, q) != path.return_point:
                bad.append((q, b, "return"))
            q0 = path.return_point
            if not (q0.x.is_zero and q0.y == path.multiplier * beta):
                bad.append((q, b, "Q0"))
    ok = not bad
    report(5, ok, f"closed form matches geometry for odd q in {qs[0]}..{qs[-1]}, "
                   "all beta and indices, return point (0, gamma*beta)")
    assert ok, bad[:5]


def test_criterion_06_wheels(report):
    failing = []
    guard = []
    for q in prime_powers_in(2, 16):
        plane = pg_from_field(q)
        for n in range(3, q + 2):
            try:
                plan = wheel_plan(q, n)
            except ConstructionFailed:
                failing.append((q, n))
                continue
            if not verify_embedding(wheel_graph(n), plan.embedding, plane).ok:
                failing.append((q, n))
        try:
            wheel(q, q + 2)
            guard.append(q)
        except ImpossibleDegree:
            pass
    ok = not failing and not guard
    if failing == [(3, 4)] and not guard:
        detail = ("wheel(3,4) unattainable: exhaustive search shows the order-3 "
                  "plane holds no rim-4 wheel, so the all-n claim fails there; "
                  "all other cells pass and every q+2 request is refused")
    else:
        detail = "all wheels 2<=q<=16, 3<=n<=q+1 verified; q+2 refused"
    report(6, ok, detail)
    assert ok, {"failing": failing, "unrefused": guard}


def test_criterion_07_gears(report):
    bad = []
    for q in prime_powers_in(5, 16):
        plane = pg_from_field(q)
        for n in range(3, q + 2):
            plan = gear_plan(q, n)
            if not verify_embedding(gear_graph(n), plan.embedding, plane).ok:
                bad.append((q, n))
    table = []
    v2 = pg_from_field(2).to_generic().plane
    for n in (3, 4, 5):
        if exists_embedding(gear_graph(n), v2).status != "notfound":
            table.append((2, n))
    v3 = pg_from_field(3).to_generic().plane
    if exists_embedding(gear_graph(3), v3).status != "found":
        table.append((3, 3))
    v4 = pg_from_field(4).to_generic().plane
    for n in (3, 4, 5):
        if exists_embedding(gear_graph(n), v4).status != "found":
            table.append((4, n))
    ok = not bad and not table
    report(7, ok, "gears verified for 5<=q<=16, 3<=n<=q+1; small-plane search "
                   "table exact (none in order 2, G_3 in order 3, G_3..G_5 in order 4)")
    assert ok, {"cells": bad, "table": table}


def test_criterion_08_oracle_equivalence(report):
    mismatches = []
    for q in (2, 3, 4):
        view = pg_from_field(q).to_generic().plane
        for n in range(3, q + 3):
            for name, build, graph in (
                ("wheel", wheel, wheel_graph(n)),
                ("gear", gear, gear_graph(n)),
            ):
                try:
                    build(q, n)
                    emitted = True
                except (ConstructionFailed, ImpossibleDegree):
                    emitted = False
                found = exists_embedding(graph, view).status == "found"
                if emitted != found:
                    mismatches.append((name, q, n, emitted, found))
        agv = ag_from_field(q).to_generic().plane
        for k in range(3, q * q + 1):
            ag_cycle(q, k)
            if exists_embedding(cycle_graph(k), agv).status != "found":
                mismatches.append(("ag-cycle", q, k))
        for k in range(3, q * q + q + 2):
            pg_cycle(q, k)
            if exists_embedding(cycle_graph(k), view).status != "found":
                mismatches.append(("pg-cycle", q, k))
    ok = not mismatches
    report(8, ok, "constructions and exhaustive search agree on every "
                   "wheel, gear, and cycle claim for q <= 4")
    assert ok, mismatches


def test_criterion_09_singer_difference_tables(report):
    bad = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        D = singer_difference_set(q)
        n = q * q + q + 1
        diffs = sorted((a - b) % n for a in D for b in D if a != b)
        if diffs != list(range(1, n)):
            bad.append(q)
    ok = not bad and singer_difference_set(2) == (0, 1, 3)
    report(9, ok, "perfect difference tables for q in {2,3,4,5,7,8,9}; "
                   "q=2 normalizes to (0,1,3)")
    assert ok, bad


def _produce_artifacts(root: str) -> None:
    os.makedirs(root, exist_ok=True)
    j = os.path.join
    rc = 0
    rc |= main(["hypj", "sweep", "--min", "4", "--max", "10000", "--jobs", "8",
                "--out", j(root, "certs.jsonl")])
    rc |= main(["plane", "export", "--q", "9", "--out", j(root, "pg9.json")])
    rc |= main(["plane", "export", "--q", "5", "--model", "ag",
                "--out", j(root, "ag5.json")])
    rc |= main(["cycle", "sweep", "--q", "5", "--plane", "pg",
                "--out-dir", j(root, "cyc5")])
    rc |= main(["wheel", "--q", "13", "--n", "14", "--out", j(root, "w13.json")])
    rc |= main(["gear", "--q", "13", "--n", "13", "--out", j(root, "g13.json")])
    rc |= main(["gear", "--q", "8", "--n", "9", "--out", j(root, "g8.json")])
    rc |= main(["gear", "sweep", "--q-max", "16", "--out", j(root, "gears.txt")])
    rc |= main(["oracle", "--graph", "gear:4", "--plane", "pg:3",
                "--out", j(root, "oracle_g4.json")])
    rc |= main(["oracle", "--graph", "cycle:7", "--plane", "cyclic:2",
                "--out", j(root, "oracle_c7.json")])
    assert rc == 0


def test_criterion_10_determinism(report, tmp_path, capsys):
    a = str(tmp_path / "run_a")
    b = str(tmp_path / "run_b")
    _produce_artifacts(a)
    _produce_artifacts(b)
    capsys.readouterr()
    diffs = []
    for dirpath, _, files in os.walk(a):
        rel = os.path.relpath(dirpath, a)
        for f in sorted(files):
            pa = os.path.join(dirpath, f)
            pb = os.path.join(b, rel, f)
            if not os.path.exists(pb) or not filecmp.cmp(pa, pb, shallow=False):
                diffs.append(os.path.join(rel, f))
    n_files = sum(len(fs) for _, _, fs in os.walk(a))
    ok = not diffs and n_files >= 30
    report(10, ok, f"{n_files} artifact files byte-identical across repeated runs")
    assert ok, diffs


def test_report_footer(capsys):
    with capsys.disabled():
        print("acceptance run complete", flush=True)
