"""Wheel and gear embeddings in projective planes.

Wheels ride on arcs (parabola plus the conic's infinite point, plus the
nucleus in even characteristic) except for the tight odd-order case
W_{q+1}, which uses the spoke-pencil construction with a searched closing
vertex.  Gears split by size: small ones are wheels with alternate spokes
removed, mid-range ones braid two disjoint base paths through infinite
points, and the maximum gear alternates directions with affine points
chosen greedily.  Every route ends in the verifier; no route emits an
unchecked embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cycles import SlopeLabeling, base_path, labeling_for
from .gf import make_field, prime_power
from .graphs import (
    Embedding,
    ImpossibleDegree,
    gear_graph,
    make_embedding,
    verify_embedding,
    wheel_graph,
)
from .oracle import exists_embedding
from .plane import (
    LINE_INF,
    CoordPlane,
    GenericPlane,
    affine_triple,
    canon,
    incident,
    intersect,
    is_affine,
    line_through,
    pg_from_field,
)


class ConstructionFailed(RuntimeError):
    """No verifier-passing embedding came out of the attempted routes."""


ROUTE_ARC = "ARC"
ROUTE_EXPLICIT = "EXPLICIT"
ROUTE_FROM_WHEEL = "FROM_WHEEL"
ROUTE_PATHS_EVEN = "PATHS_EVEN"
ROUTE_PATHS_ODD = "PATHS_ODD"
ROUTE_MAX_EVEN = "MAX_EVEN"
ROUTE_MAX_ODD = "MAX_ODD"
ROUTE_ORACLE = "ORACLE"


@dataclass(frozen=True)
class WheelPlan:
    center: object
    rim: tuple
    spokes: tuple
    route: str
    embedding: Embedding


@dataclass(frozen=True)
class GearPlan:
    center: object
    rim: tuple
    spokes: tuple
    route: str
    embedding: Embedding


def _spoke_lines(emb: Embedding, graph) -> tuple:
    return tuple(
        img for (u, v), img in zip(graph.edges, emb.edge_images) if 0 in (u, v)
    )


def _center_raw_incidence(emb: Embedding, plane) -> int:
    center = emb.vertex_images[0]
    used = set(emb.edge_images)
    if isinstance(plane, CoordPlane):
        return sum(1 for l in used if incident(plane.spec, center, l))
    return sum(1 for li in used if center in plane.lines[li])


# ---------------------------------------------------------------------------
# arcs


def arc_points(q: int) -> list:
    """A largest easy arc of PG(2,q): the parabola with its infinite point,
    and the nucleus when the characteristic is two."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q={q} is not a prime power")
    spec = make_field(*pp)
    pts = []
    for t in range(q):
        e = spec.element(t)
        pts.append(affine_triple(spec, e.enc, (e * e).enc))
    pts.append((0, 1, 0))
    if q % 2 == 0:
        pts.append((1, 0, 0))
    if q <= 16:
        # cheap insurance on the no-three-collinear property
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                l = line_through(spec, pts[i], pts[j])
                assert sum(1 for P in pts if incident(spec, P, l)) == 2
    return pts


# ---------------------------------------------------------------------------
# wheels


def wheel(q: int, n: int, plane=None) -> Embedding:
    return wheel_plan(q, n, plane).embedding


def wheel_plan(q: int, n: int, plane=None) -> WheelPlan:
    if isinstance(plane, GenericPlane):
        return _wheel_generic(plane, n)
    if prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")
    if n < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    if n > q + 1:
        raise ImpossibleDegree(f"wheel center degree {n} exceeds the pencil size {q + 1}")
    pgp = pg_from_field(q)
    graph = wheel_graph(n)
    if q % 2 == 1 and n == q + 1:
        emb = _wheel_explicit(q, pgp, graph)
        route = ROUTE_EXPLICIT
        if emb is None:
            emb = _wheel_oracle(q, pgp, graph)
            route = ROUTE_ORACLE
    else:
        arc = arc_points(q)
        assert len(arc) >= n + 1
        emb = make_embedding("PG", q, graph, arc[: n + 1], plane=pgp)
        route = ROUTE_ARC
    rep = verify_embedding(graph, emb, pgp)
    assert rep.ok, rep.violations
    return WheelPlan(
        center=emb.vertex_images[0],
        rim=emb.vertex_images[1:],
        spokes=_spoke_lines(emb, graph),
        route=route,
        embedding=emb,
    )


def _wheel_explicit(q: int, pgp: CoordPlane, graph) -> Optional[Embedding]:
    # odd q, n = q+1: rim points alternate between a fixed line's pencil
    # cut and a transversal m, closed off by a searched vertex T
    spec = pgp.spec
    O = (0, 0, 1)
    P = sorted(t for t in pgp.points() if not is_affine(t))  # points of the infinite line
    ells = [line_through(spec, O, t) for t in P]
    for c in range(1, q):
        m = canon(spec, (1, 0, spec.eneg(c)))  # x = c, through P[0]
        Qs = {i: intersect(spec, ells[i], m) for i in range(1, q + 1, 2)}
        zig = []
        for i in range(0, q, 2):
            zig.append(P[i])  # P_1, P_3, ... in 1-based speech
            if i + 1 <= q - 1:
                zig.append(Qs[i + 1])
        # zig = [P_1, Q_2, P_3, ..., Q_{q-1}, P_q]; close through T on ell_{q+1}
        t_line = ells[q]
        for T in sorted(t for t in pgp.points() if incident(spec, t, t_line)):
            if T == O or T == P[q] or T in zig:
                continue
            rim = zig + [T]
            emb = make_embedding("PG", q, graph, [O] + rim, plane=pgp)
            if verify_embedding(graph, emb, pgp).ok:
                return emb
    return None


def _wheel_oracle(q: int, pgp: CoordPlane, graph) -> Embedding:
    view = pgp.to_generic()
    res = exists_embedding(graph, view.plane)
    if res.status != "found":
        raise ConstructionFailed(f"wheel search ended with {res.status}")
    imgs = [view.point_triples[i] for i in res.embedding.vertex_images]
    return make_embedding("PG", q, graph, imgs, plane=pgp)


def _wheel_generic(plane: GenericPlane, n: int) -> WheelPlan:
    if n < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    if n > plane.q + 1:
        raise ImpossibleDegree(f"wheel center degree {n} exceeds the pencil size {plane.q + 1}")
    graph = wheel_graph(n)
    arc = []
    for p in range(plane.n_points):
        ok = True
        for i in range(len(arc)):
            for j in range(i + 1, len(arc)):
                li = plane.line_between(arc[i], arc[j])
                if li is not None and p in plane.lines[li]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            arc.append(p)
        if len(arc) == n + 1:
            break
    route = ROUTE_ARC
    if len(arc) == n + 1:
        try:
            emb = make_embedding("GENERIC", plane.q, graph, arc, plane=plane)
        except ValueError:
            emb = None
    else:
        emb = None
    if emb is None or not verify_embedding(graph, emb, plane).ok:
        res = exists_embedding(graph, plane)
        if res.status != "found":
            raise ConstructionFailed(f"wheel search ended with {res.status}")
        emb, route = res.embedding, ROUTE_ORACLE
    rep = verify_embedding(graph, emb, plane)
    assert rep.ok, rep.violations
    return WheelPlan(
        center=emb.vertex_images[0],
        rim=emb.vertex_images[1:],
        spokes=_spoke_lines(emb, graph),
        route=route,
        embedding=emb,
    )


# ---------------------------------------------------------------------------
# gears


def gear(q: int, n: int, plane=None) -> Embedding:
    return gear_plan(q, n, plane).embedding


def gear_plan(q: int, n: int, plane=None) -> GearPlan:
    if isinstance(plane, GenericPlane):
        return _gear_generic(plane, n)
    if prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")
    if n < 3:
        raise ValueError("gear needs at least 3 spokes")
    if n > q + 1:
        raise ImpossibleDegree(f"gear center degree {n} exceeds the pencil size {q + 1}")
    pgp = pg_from_field(q)
    graph = gear_graph(n)
    if q <= 4 or (q, n) == (5, 4):
        emb, route = _gear_oracle(q, n, pgp, graph), ROUTE_ORACLE
    elif n <= (q + 1) // 2:
        emb, route = _gear_from_wheel(q, n, pgp, graph), ROUTE_FROM_WHEEL
    elif n <= q:
        lab = labeling_for(q)
        if n % 2 == 0:
            emb, route = _gear_paths_even(q, n, lab, pgp, graph), ROUTE_PATHS_EVEN
        else:
            emb, route = _gear_paths_odd(q, n, lab, pgp, graph), ROUTE_PATHS_ODD
        if emb is None:
            if q < 8:
                emb, route = _gear_oracle(q, n, pgp, graph), ROUTE_ORACLE
            else:
                raise ConstructionFailed(f"path route exhausted for G_{n} at q={q}")
    else:
        lab = labeling_for(q)
        if q % 2 == 0:
            emb, route = _gear_max_even(q, lab, pgp, graph), ROUTE_MAX_EVEN
        else:
            emb, route = _gear_max_odd(q, lab, pgp, graph), ROUTE_MAX_ODD
    rep = verify_embedding(graph, emb, pgp)
    assert rep.ok, rep.violations
    assert _center_raw_incidence(emb, pgp) == n, "a rim edge runs through the center"
    return GearPlan(
        center=emb.vertex_images[0],
        rim=emb.vertex_images[1:],
        spokes=_spoke_lines(emb, graph),
        route=route,
        embedding=emb,
    )


def _gear_oracle(q: int, n: int, pgp: CoordPlane, graph) -> Embedding:
    view = pgp.to_generic()
    res = exists_embedding(graph, view.plane)
    if res.status != "found":
        raise ConstructionFailed(f"gear search ended with {res.status}")
    imgs = [view.point_triples[i] for i in res.embedding.vertex_images]
    return make_embedding("PG", q, graph, imgs, plane=pgp)


def _gear_from_wheel(q: int, n: int, pgp: CoordPlane, graph) -> Embedding:
    big = wheel(q, 2 * n)
    # same vertex numbering; the gear simply forgets the even-rim spokes
    return make_embedding("PG", q, graph, big.vertex_images, plane=pgp)


def _gear_paths_even(q, n, lab, pgp, graph) -> Optional[Embedding]:
    spec = lab.spec
    O = (0, 0, 1)
    d0, d1 = lab.direction_point(0), lab.direction_point(1)
    for bp in range(1, q):
        P = [t.triple() for t in base_path(q, lab, bp).points]
        open_line = lab.class_line_through(1, P[0])  # joins (1) to P_0
        close_vert = lab.class_line_through(0, P[n - 2])  # joins P_{n-2} to (0)
        for bq in range(1, q):
            if bq == bp:
                continue
            Q = [t.triple() for t in base_path(q, lab, bq).points]
            if incident(spec, Q[n - 1], open_line):
                continue  # closing class-1 line would repeat the opening one
            if incident(spec, Q[1], close_vert):
                continue  # the two vertical connectors would coincide
            rim = P[: n - 1] + [d0] + Q[1:n] + [d1]
            emb = make_embedding("PG", q, graph, [O] + rim, plane=pgp)
            if verify_embedding(graph, emb, pgp).ok:
                return emb
    return None


def _gear_paths_odd(q, n, lab, pgp, graph) -> Optional[Embedding]:
    spec = lab.spec
    O = (0, 0, 1)
    d0 = lab.direction_point(0)
    ln = lab.through_o_line(n)
    s = lab.slopes[n]
    t_cands = [lab.direction_point(n)]
    t_cands += sorted(
        affine_triple(spec, x, spec.emul(s, x)) for x in range(1, q)
    )
    for bp in range(1, q):
        P = [t.triple() for t in base_path(q, lab, bp).points]
        for k in (1, n):
            back = lab.class_line_through(k, P[0])
            X = intersect(spec, back, lab.through_o_line(n - 3))
            if X == P[n - 3]:
                continue  # the rejoin point must land on the other path
            Q = [None] * (n - 2)
            Q[n - 3] = X
            for i in range(n - 3, 0, -1):
                link = lab.class_line_through(i + 1, Q[i])
                Q[i - 1] = intersect(spec, link, lab.through_o_line(i - 1))
            for T in t_cands:
                rim = P[:n] + [d0, T] + Q
                if T in P or T in Q:
                    continue
                try:
                    emb = make_embedding("PG", q, graph, [O] + rim, plane=pgp)
                except ValueError:
                    continue
                if verify_embedding(graph, emb, pgp).ok:
                    return emb
    return None


def _affine_points_sorted(pgp: CoordPlane) -> list:
    return [t for t in pgp.points() if is_affine(t)]


def _gear_max_even(q, lab, pgp, graph) -> Embedding:
    spec = lab.spec
    n2 = q + 1
    cand = _affine_points_sorted(pgp)
    O = (0, 0, 1)
    A = []
    used = set()
    for i in range(n2):
        li = lab.through_o_line(i)
        lo = lab.through_o_line((i + 1) % n2)
        prev = lab.class_line_through(i, A[i - 1]) if i >= 1 else None
        wrap = lab.class_line_through(0, A[0]) if i == q else None
        for pt in cand:
            if pt == O or pt in used:
                continue
            if incident(spec, pt, li) or incident(spec, pt, lo):
                continue
            if prev is not None and incident(spec, pt, prev):
                continue
            if wrap is not None and incident(spec, pt, wrap):
                continue
            A.append(pt)
            used.add(pt)
            break
        else:
            raise AssertionError("greedy rim choice exhausted the plane")
    rim = []
    for i in range(n2):
        rim += [lab.direction_point(i), A[i]]
    return make_embedding("PG", q, graph, [O] + rim, plane=pgp)


def _gear_max_odd(q, lab, pgp, graph) -> Embedding:
    spec = lab.spec
    n2 = q + 1
    cand = _affine_points_sorted(pgp)
    O = (0, 0, 1)
    A = {}
    used = set()
    for i in range(1, n2):
        li = lab.through_o_line(i)
        lo = lab.through_o_line((i + 1) % n2)
        prev = lab.class_line_through(i, A[i - 1]) if i >= 2 else None
        for pt in cand:
            if pt == O or pt in used:
                continue
            if incident(spec, pt, li) or incident(spec, pt, lo):
                continue
            if prev is not None and incident(spec, pt, prev):
                continue
            A[i] = pt
            used.add(pt)
            break
        else:
            raise AssertionError("greedy rim choice exhausted the plane")
    # the class-0/class-1 corner vertex goes last, when its avoidances are known
    l0, l1 = lab.through_o_line(0), lab.through_o_line(1)
    av0 = lab.class_line_through(0, A[q])
    av1 = lab.class_line_through(1, A[1])
    for pt in cand:
        if pt == O or pt in used:
            continue
        if incident(spec, pt, l0) or incident(spec, pt, l1):
            continue
        if incident(spec, pt, av0) or incident(spec, pt, av1):
            continue
        A[0] = pt
        break
    else:
        raise AssertionError("no corner vertex available")
    rim = []
    for i in range(n2):
        rim += [lab.direction_point(i), A[i]]
    return make_embedding("PG", q, graph, [O] + rim, plane=pgp)


def _gear_generic(plane: GenericPlane, n: int) -> GearPlan:
    if n < 3:
        raise ValueError("gear needs at least 3 spokes")
    if n > plane.q + 1:
        raise ImpossibleDegree(f"gear center degree {n} exceeds the pencil size {plane.q + 1}")
    graph = gear_graph(n)
    emb = None
    route = ROUTE_FROM_WHEEL
    if 2 * n <= plane.q + 1:
        try:
            big = wheel_plan(plane.q, 2 * n, plane).embedding
            emb = make_embedding("GENERIC", plane.q, graph, big.vertex_images, plane=plane)
        except (ConstructionFailed, ValueError):
            emb = None
    if emb is None or not verify_embedding(graph, emb, plane).ok:
        res = exists_embedding(graph, plane)
        if res.status != "found":
            raise ConstructionFailed(f"gear search ended with {res.status}")
        emb, route = res.embedding, ROUTE_ORACLE
    rep = verify_embedding(graph, emb, plane)
    assert rep.ok, rep.violations
    return GearPlan(
        center=emb.vertex_images[0],
        rim=emb.vertex_images[1:],
        spokes=_spoke_lines(emb, graph),
        route=route,
        embedding=emb,
    )


def gear_from_wheel(q: int, n: int) -> Embedding:
    if not 3 <= n <= (q + 1) // 2:
        raise ValueError(f"wheel route needs 3 <= n <= {(q + 1) // 2}")
    pgp = pg_from_field(q)
    graph = gear_graph(n)
    emb = _gear_from_wheel(q, n, pgp, graph)
    rep = verify_embedding(graph, emb, pgp)
    assert rep.ok, rep.violations
    return emb


def gear_paths(q: int, n: int) -> Embedding:
    if q <= 4:
        raise ValueError("path routes need q > 4")
    if not (q + 1) // 2 < n <= q:
        raise ValueError(f"path route needs {(q + 1) // 2} < n <= {q}")
    pgp = pg_from_field(q)
    graph = gear_graph(n)
    if (q, n) == (5, 4):
        emb = _gear_oracle(q, n, pgp, graph)
    else:
        lab = labeling_for(q)
        builder = _gear_paths_even if n % 2 == 0 else _gear_paths_odd
        emb = builder(q, n, lab, pgp, graph)
        if emb is None:
            if q < 8:
                emb = _gear_oracle(q, n, pgp, graph)
            else:
                raise ConstructionFailed(f"path route exhausted for G_{n} at q={q}")
    rep = verify_embedding(graph, emb, pgp)
    assert rep.ok, rep.violations
    return emb


def gear_max(q: int) -> Embedding:
    if q <= 4:
        raise ValueError("the maximum-gear construction needs q > 4")
    return gear(q, q + 1)
