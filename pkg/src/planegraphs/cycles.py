"""Cycle embeddings in AG(2,q) and PG(2,q) built from slope labelings.

The engine is a labeled pencil of lines through the origin: class 0 is
vertical, the remaining classes are slopes drawn from powers of a
primitive element.  Walking parallels of consecutive classes produces a
base path of q+1 points whose return to the vertical axis is multiplication
by a constant; when that constant generates GF(q)*, glued paths sweep the
whole affine plane.  Everything longer or shorter is surgery on that chain.

Each constructor re-verifies its output as an embedding before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .gf import (
    DegenerateAlpha,
    FieldElement,
    FieldSpec,
    element_order,
    first_primitive,
    hypothesis_j_search,
    make_field,
    prime_power,
)
from .graphs import Embedding, cycle_graph, make_embedding, verify_embedding
from .oracle import exists_embedding
from .plane import (
    LINE_INF,
    AffinePoint,
    CoordPlane,
    GenericPlane,
    affine_coords,
    affine_triple,
    ag_from_field,
    canon,
    incident,
    intersect,
    line_through,
    parallel_line,
    pg_from_field,
)


class NoCertificate(RuntimeError):
    """No primitive-pair certificate is known for this field order."""


# ---------------------------------------------------------------------------
# slope labelings of the pencil through O


@dataclass(frozen=True)
class SlopeLabeling:
    """Assignment of the q+1 parallel classes to slopes; None is vertical."""

    spec: FieldSpec
    kind: str
    alpha: FieldElement
    slopes: tuple  # index = class; entry None or a slope encoding

    @classmethod
    def make(cls, spec: FieldSpec, kind: str, alpha) -> "SlopeLabeling":
        a = alpha if isinstance(alpha, FieldElement) else spec.element(alpha)
        q = spec.q
        if kind == "A":
            slopes = [None] + [(a**i).enc for i in range(1, q)] + [0]
        elif kind == "B":
            slopes = [None] + [(a**i).enc for i in range(1, q - 1)] + [0, 1]
        else:
            raise ValueError(f"unknown labeling kind {kind!r}")
        body = [s for s in slopes if s is not None]
        if len(set(body)) != q:
            raise ValueError(f"alpha {a!r} does not generate distinct slopes")
        return cls(spec, kind, a, tuple(slopes))

    @property
    def q(self) -> int:
        return self.spec.q

    def through_o_line(self, i: int):
        s = self.slopes[i]
        if s is None:
            return (1, 0, 0)  # x = 0
        return canon(self.spec, (s, self.spec.eneg(1), 0))  # y = s x

    def direction_point(self, i: int):
        s = self.slopes[i]
        return (0, 1, 0) if s is None else (1, s, 0)

    def class_line_through(self, i: int, P):
        # the unique line of class i through P (P itself may sit on l_i)
        if incident(self.spec, P, self.through_o_line(i)):
            return self.through_o_line(i)
        return parallel_line(self.spec, self.through_o_line(i), P)


def labeling_for(q: int, kind: Optional[str] = None, alpha=None) -> SlopeLabeling:
    """Default labeling: certificate alpha, kind A for odd q and B for even."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q={q} is not a prime power")
    spec = make_field(*pp)
    if alpha is None:
        cert = hypothesis_j_search(q)
        if cert is None:
            raise NoCertificate(f"no primitive-pair certificate for q={q}")
        alpha = cert.alpha
    if kind is None:
        kind = "A" if q % 2 else "B"
    return SlopeLabeling.make(spec, kind, alpha)


def _resolve_labeling(q: int, labeling) -> SlopeLabeling:
    if labeling is None:
        return labeling_for(q)
    if isinstance(labeling, str):
        return labeling_for(q, kind=labeling)
    if isinstance(labeling, SlopeLabeling):
        if labeling.q != q:
            raise ValueError(f"labeling is for q={labeling.q}, not q={q}")
        return labeling
    raise TypeError(f"labeling must be None, 'A'/'B', or SlopeLabeling")


# ---------------------------------------------------------------------------
# base paths


@dataclass(frozen=True)
class BasePath:
    q: int
    labeling: SlopeLabeling
    beta: FieldElement
    points: tuple  # AffinePoint P_0..P_q, with P_i on l_i
    links: tuple  # q connecting lines
    return_line: tuple
    return_point: AffinePoint  # Q_0 on l_0
    multiplier: FieldElement  # y(Q_0) / beta


def base_path(q: int, labeling=None, beta=1) -> BasePath:
    """Walk the parallel-class recurrence from (0, beta); purely geometric."""
    lab = _resolve_labeling(q, labeling)
    spec = lab.spec
    b = beta if isinstance(beta, FieldElement) else spec.element(beta)
    if b.is_zero:
        raise ValueError("base path must start off the origin")
    n = q + 1
    origin = (0, 0, 1)
    cur = affine_triple(spec, 0, b.enc)
    pts = [cur]
    links = []
    for j in range(q):
        # the link leaving P_j has class j+2; P_{j+1} sits on l_{j+1}
        link = lab.class_line_through((j + 2) % n, cur)
        cur = intersect(spec, link, lab.through_o_line(j + 1))
        if cur == origin:
            raise ValueError("path degenerated into the origin")
        links.append(link)
        pts.append(cur)
    ret = lab.class_line_through(1, cur)
    q0 = intersect(spec, ret, lab.through_o_line(0))

    for i, P in enumerate(pts):
        assert incident(spec, P, lab.through_o_line(i))
    assert len(set(pts)) == n and origin not in pts
    x0, y0 = affine_coords(spec, q0)
    mult = spec.element(y0) / b

    def _ap(t):
        x, y = affine_coords(spec, t)
        return AffinePoint(spec.element(x), spec.element(y))

    return BasePath(
        q=q,
        labeling=lab,
        beta=b,
        points=tuple(_ap(t) for t in pts),
        links=tuple(links),
        return_line=ret,
        return_point=_ap(q0),
        multiplier=mult,
    )


def path_closed_form(q: int, alpha, beta, i: int) -> AffinePoint:
    """Algebraic positions along the kind-A path: index i maps to the far
    endpoint of link i (P_{i+1}; i=q gives the return point)."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q={q} is not a prime power")
    spec = make_field(*pp)
    a = alpha if isinstance(alpha, FieldElement) else spec.element(alpha)
    b = beta if isinstance(beta, FieldElement) else spec.element(beta)
    if not 0 <= i <= q:
        raise ValueError(f"index {i} outside 0..{q}")
    one = spec.one_el
    zero = spec.zero_el
    try:
        if i <= q - 3:
            num = b * (one + a) ** i
            return AffinePoint(num / (a ** (i + 1) * (one - a)), num / (one - a))
        c = b * (one + a) ** (q - 3) / (one - a)
        if i == q - 2:
            return AffinePoint(c, c)
        if i == q - 1:
            return AffinePoint(c, zero)
        return AffinePoint(zero, -(a * c))
    except ZeroDivisionError:
        raise DegenerateAlpha(f"closed form undefined at alpha={a!r}")


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class CycleChain:
    """A closed cycle given in traversal order: lines[i] joins points[i]
    and points[i+1 mod length]."""

    model: str  # AG | PG | CYCLIC
    q: int
    points: tuple
    lines: tuple

    @property
    def length(self) -> int:
        return len(self.points)

    def default_plane(self):
        if self.model == "AG":
            return ag_from_field(self.q)
        if self.model == "PG":
            return pg_from_field(self.q)
        if self.model == "CYCLIC":
            return cyclic_plane(self.q)
        raise ValueError(f"unknown chain model {self.model!r}")

    def to_embedding(self, plane=None) -> Embedding:
        plane = plane if plane is not None else self.default_plane()
        graph = cycle_graph(self.length)
        return make_embedding(
            self.model if self.model != "CYCLIC" else "CYCLIC",
            self.q,
            graph,
            self.points,
            plane=plane,
        )


def _verify_chain(chain: CycleChain, plane=None) -> CycleChain:
    assert len(chain.points) == len(chain.lines)
    plane = plane if plane is not None else chain.default_plane()
    L = chain.length
    if chain.model in ("AG", "PG"):
        spec = plane.spec
        for i in range(L):
            want = line_through(spec, chain.points[i], chain.points[(i + 1) % L])
            assert chain.lines[i] == want, f"chain line {i} is not the joining line"
    else:
        for i in range(L):
            li = plane.line_between(chain.points[i], chain.points[(i + 1) % L])
            assert chain.lines[i] == li, f"chain line {i} mismatches the plane"
    rep = verify_embedding(cycle_graph(L), chain.to_embedding(plane), plane)
    assert rep.ok, rep.violations
    return chain


# ---------------------------------------------------------------------------
# long cycles from glued paths


def long_cycle(q: int, labeling=None) -> CycleChain:
    """Glue the beta-orbit of base paths along their class-1 return lines."""
    lab = _resolve_labeling(q, labeling)
    spec = lab.spec
    first = base_path(q, lab, spec.one_el)
    m = first.multiplier
    order = element_order(m)
    points, lines = [], []
    b = spec.one_el
    for t in range(order):
        path = first if t == 0 else base_path(q, lab, b)
        points.extend(P.triple() for P in path.points)
        lines.extend(path.links)
        lines.append(path.return_line)
        b = m * b
    assert b == spec.one_el
    chain = CycleChain("AG", q, tuple(points), tuple(lines))
    assert chain.length == (q + 1) * order
    origin = (0, 0, 1)
    assert all(not incident(spec, origin, l) for l in chain.lines)
    return _verify_chain(chain, ag_from_field(q))


def cycle_q2(q: int, labeling=None) -> CycleChain:
    """Reroute one chain edge through the origin, covering all of AG(2,q)."""
    lab = _resolve_labeling(q, labeling)
    chain = long_cycle(q, lab)
    if chain.length != q * q - 1:
        raise ValueError("rerouting needs the full-orbit long cycle")
    # drop the edge P_0(beta=1) -- P_1 and run both ends into O instead
    points = ((0, 0, 1),) + chain.points[1:] + (chain.points[0],)
    lines = (lab.through_o_line(1),) + chain.lines[1:] + (lab.through_o_line(0),)
    out = CycleChain("AG", q, points, lines)
    assert out.length == q * q
    return _verify_chain(out, ag_from_field(q))


@lru_cache(maxsize=None)
def _default_chain(q: int):
    lab = labeling_for(q)
    return lab, long_cycle(q, lab)


# ---------------------------------------------------------------------------
# arcs for the short cycles


def _parabola_chain(q: int, k: int, spec: FieldSpec) -> CycleChain:
    pts = []
    for t in range(k):
        e = spec.element(t)
        pts.append(affine_triple(spec, e.enc, (e * e).enc))
    lines = [line_through(spec, pts[i], pts[(i + 1) % k]) for i in range(k)]
    return CycleChain("AG", q, tuple(pts), tuple(lines))


def _ellipse_points(q: int, spec: FieldSpec) -> list:
    # first irreducible x^2 + bx + c by (b, c) order, then its unit circle
    for b in range(q):
        for c in range(q):
            be, ce = spec.element(b), spec.element(c)
            if all(
                not (spec.element(t) ** 2 + be * spec.element(t) + ce).is_zero
                for t in range(q)
            ):
                pts = []
                one = spec.one_el
                for x in range(q):
                    for y in range(q):
                        xe, ye = spec.element(x), spec.element(y)
                        if xe * xe + be * xe * ye + ce * ye * ye == one:
                            pts.append(affine_triple(spec, x, y))
                assert len(pts) == q + 1, "norm-one circle must have q+1 points"
                return pts
    raise AssertionError("no irreducible quadratic found")


def _ellipse_chain(q: int, spec: FieldSpec) -> CycleChain:
    pts = _ellipse_points(q, spec)
    k = q + 1
    lines = [line_through(spec, pts[i], pts[(i + 1) % k]) for i in range(k)]
    return CycleChain("AG", q, tuple(pts), tuple(lines))


# ---------------------------------------------------------------------------
# pancyclicity constructors


def _oracle_chain(q: int, k: int, model: str) -> CycleChain:
    view = (ag_from_field(q) if model == "AG" else pg_from_field(q)).to_generic()
    res = exists_embedding(cycle_graph(k), view.plane)
    if res.status != "found":
        raise ValueError(f"search gave {res.status} for a {k}-cycle in {model}(2,{q})")
    spec = make_field(*prime_power(q))
    pts = [view.point_triples[i] for i in res.embedding.vertex_images]
    lines = [line_through(spec, pts[i], pts[(i + 1) % k]) for i in range(k)]
    chain = CycleChain(model, q, tuple(pts), tuple(lines))
    plane = ag_from_field(q) if model == "AG" else pg_from_field(q)
    return _verify_chain(chain, plane)


def ag_cycle(q: int, k: int) -> CycleChain:
    """A k-cycle in AG(2,q) for any feasible k (3 <= k <= q^2)."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q={q} is not a prime power")
    if not 3 <= k <= q * q:
        raise ValueError(f"k={k} outside 3..{q * q}")
    if q in (2, 3):
        return _oracle_chain(q, k, "AG")
    spec = make_field(*pp)
    if k <= q:
        return _verify_chain(_parabola_chain(q, k, spec), ag_from_field(q))
    if k == q + 1:
        return _verify_chain(_ellipse_chain(q, spec), ag_from_field(q))
    lab, chain = _default_chain(q)
    if k == q * q - 1:
        return chain
    if k == q * q:
        return cycle_q2(q, lab)
    return _verify_chain(_surgery_chain(q, k, lab, chain), ag_from_field(q))


def _surgery_chain(q: int, k: int, lab: SlopeLabeling, chain: CycleChain) -> CycleChain:
    # open the long chain after k-1 points and close through O; when the
    # natural closing class collides with the opening line, skip one period
    # ahead along a through-O line instead
    spec = lab.spec
    ch, cl = chain.points, chain.lines
    N = q * q - 1
    n = q + 1
    O = (0, 0, 1)
    r = (k - 1) % n
    if r >= 2:
        pts = (O,) + ch[1:k]
        lines = (lab.through_o_line(1),) + cl[1 : k - 1] + (lab.through_o_line(r),)
        return CycleChain("AG", q, pts, lines)
    c = (k - 3) % n
    j2 = (k - 3 + n) % N
    j3 = (k - 2 + n) % N
    jump = lab.through_o_line(c)
    assert incident(spec, ch[k - 3], jump) and incident(spec, ch[j2], jump)
    pts = (O,) + ch[1 : k - 2] + (ch[j2], ch[j3])
    lines = (
        (lab.through_o_line(1),)
        + cl[1 : k - 3]
        + (jump, cl[j2], lab.through_o_line((c + 1) % n))
    )
    return CycleChain("AG", q, pts, lines)


def pg_cycle(q: int, k: int) -> CycleChain:
    """A k-cycle in PG(2,q) for any feasible k (3 <= k <= q^2+q+1)."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q={q} is not a prime power")
    top = q * q + q + 1
    if not 3 <= k <= top:
        raise ValueError(f"k={k} outside 3..{top}")
    if k == top:
        return singer_cycle(q)
    if q in (2, 3):
        return _oracle_chain(q, k, "PG")
    if k <= q * q:
        ag = ag_cycle(q, k)
        return _verify_chain(CycleChain("PG", q, ag.points, ag.lines), pg_from_field(q))
    return _verify_chain(_ladder_chain(q, k), pg_from_field(q))


def _ladder_chain(q: int, k: int) -> CycleChain:
    """The q^2+1 .. q^2+q rungs: splice infinite points into the long chain."""
    lab, chain = _default_chain(q)
    ch, cl = chain.points, chain.lines
    n = q + 1
    N = q * q - 1
    O = (0, 0, 1)
    l = [lab.through_o_line(i) for i in range(n)]
    d = [lab.direction_point(i) for i in range(n)]

    def Q(c):
        # class-c point of the final glued path
        return ch[q * q - q - 2 + c]

    seg_pts = ch[1 : q * q - q]  # P_1 .. P_{q^2-q-1}
    seg_lines = cl[1 : q * q - q]  # ends with the link into Q(2)

    def tail(t0):
        pts, lines = [], []
        for t in range(t0, q + 1):
            pts += [d[t], Q(t)]
            lines += [cl[q * q - q - 4 + t], l[t]]
        return pts, lines

    delta = q * q + q - k
    if delta == 0:
        return _full_rung(q, lab, chain)
    if delta == 1:
        tp, tl = tail(4)
        pts = seg_pts + (Q(2), d[2], d[3], Q(3)) + tuple(tp) + (ch[0], O)
        lines = (
            seg_lines
            + (l[2], LINE_INF, l[3])
            + tuple(tl)
            + (cl[N - 1], l[0], l[1])
        )
    elif delta == 2:
        tp, tl = tail(4)
        pts = seg_pts + (Q(2), d[2], d[3], Q(3)) + tuple(tp) + (ch[0],)
        lines = seg_lines + (l[2], LINE_INF, l[3]) + tuple(tl) + (cl[N - 1], cl[0])
    elif delta == 3:
        tp, tl = tail(4)
        pts = seg_pts + (Q(2), O, Q(3)) + tuple(tp) + (ch[0],)
        lines = seg_lines + (l[2], l[3]) + tuple(tl) + (cl[N - 1], cl[0])
    elif delta == 4:
        tp, tl = tail(4)
        pts = seg_pts + (d[3], Q(3)) + tuple(tp) + (ch[0],)
        lines = seg_lines + (l[3],) + tuple(tl) + (cl[N - 1], cl[0])
    elif delta % 2 == 1:
        i = (delta + 3) // 2  # skip the loop back through classes 4..i
        tp, tl = tail(i + 1)
        pts = seg_pts + (d[3], O, Q(i)) + tuple(tp) + (ch[0],)
        lines = seg_lines + (l[3], l[i]) + tuple(tl) + (cl[N - 1], cl[0])
    else:
        i = (delta + 4) // 2
        tp, tl = tail(i + 1)
        pts = seg_pts + (d[3], d[2], O, Q(i)) + tuple(tp) + (ch[0],)
        lines = seg_lines + (LINE_INF, l[2], l[i]) + tuple(tl) + (cl[N - 1], cl[0])
    assert len(pts) == k and len(lines) == k, (k, len(pts), len(lines))
    return CycleChain("PG", q, tuple(pts), tuple(lines))


def _full_rung(q: int, lab: SlopeLabeling, chain: CycleChain) -> CycleChain:
    # the q^2+q cycle: all points but one, every line except one chain link
    ch, cl = chain.points, chain.lines
    n = q + 1
    O = (0, 0, 1)
    l = [lab.through_o_line(i) for i in range(n)]
    d = [lab.direction_point(i) for i in range(n)]
    m = q * q - q - 2  # first index of the final path

    def R(j):
        return ch[m + j]

    def Lam(j):
        return cl[m + j]

    pts = list(ch[: m - 1]) + [ch[m - 1], d[1], O, d[2], R(1), R(2), R(3), d[3], d[4]]
    lines = list(cl[: m - 2]) + [
        cl[m - 2],
        cl[m - 1],  # the glue line into the final path, ridden to d[1]
        l[1],
        l[2],
        Lam(0),
        Lam(1),
        Lam(2),
        l[3],
        LINE_INF,
        l[4],
    ]
    for i in range(4, q + 1):
        pts += [R(i), d[(i + 1) % n]]
        lines += [Lam(i - 1), l[(i + 1) % n]]
    assert len(pts) == q * q + q and len(lines) == q * q + q
    return CycleChain("PG", q, tuple(pts), tuple(lines))


# ---------------------------------------------------------------------------
# Singer difference sets and the Hamiltonian cycle of PG(2,q)


@lru_cache(maxsize=None)
def singer_difference_set(q: int) -> tuple:
    """Residues i mod q^2+q+1 with g^i in the plane spanned by {1, g} over
    the subfield copy of GF(q) inside GF(q^3)."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q={q} is not a prime power")
    p, a = pp
    big = make_field(p, 3 * a)
    g = first_primitive(big)
    n = q * q + q + 1
    gn = g**n
    sub = [big.zero_el]
    x = big.one_el
    for _ in range(q - 1):
        sub.append(x)
        x = x * gn
    assert len({e.enc for e in sub}) == q
    span = {(u + v * g).enc for u in sub for v in sub}
    assert len(span) == q * q
    D = []
    x = big.one_el
    for i in range(n):
        if x.enc in span:
            D.append(i)
        x = x * g
    assert len(D) == q + 1
    return tuple(D)


@lru_cache(maxsize=None)
def cyclic_plane(q: int) -> GenericPlane:
    """PG(2,q) as difference-set translates on the residues mod q^2+q+1."""
    D = singer_difference_set(q)
    n = q * q + q + 1
    lines = sorted(tuple(sorted((d + t) % n for d in D)) for t in range(n))
    return GenericPlane(
        q=q, n_points=n, lines=tuple(lines), cyclic=True, transitive=True
    )


def singer_cycle(q: int) -> CycleChain:
    """The Hamiltonian cycle 0,1,...,n-1 of the cyclic plane model."""
    D = singer_difference_set(q)
    n = q * q + q + 1
    plane = cyclic_plane(q)
    d2 = min(d for d in D if (d + 1) % n in D)
    index = {line: i for i, line in enumerate(plane.lines)}
    lines = []
    for i in range(n):
        t = (i - d2) % n
        translate = tuple(sorted((d + t) % n for d in D))
        li = index[translate]
        assert i in translate and (i + 1) % n in translate
        lines.append(li)
    assert len(set(lines)) == n
    chain = CycleChain("CYCLIC", q, tuple(range(n)), tuple(lines))
    return _verify_chain(chain, plane)
