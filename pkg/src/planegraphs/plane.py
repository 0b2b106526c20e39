"""Projective and affine planes over GF(q), plus a generic incidence model.

Coordinatized points and lines are homogeneous triples of element
encodings, canonicalized so the first nonzero coordinate is 1.  A triple
(x : y : z) is a point; (a : b : c) is the line ax + by + cz = 0.  The
line at infinity is [0 : 0 : 1] and a point is affine exactly when its
last coordinate is nonzero.

GenericPlane forgets coordinates: points are 0..N-1 and lines are sorted
id tuples.  It is what the search oracle and the file format speak.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .gf import FieldElement, FieldSpec, make_field, prime_power

Triple = tuple

LINE_INF: Triple = (0, 0, 1)
DIR_VERTICAL: Triple = (0, 1, 0)


def canon(spec: FieldSpec, t) -> Triple:
    """Scale a homogeneous triple so its first nonzero entry is 1."""
    for v in t:
        if v:
            if v == 1:
                return tuple(t)
            inv = spec.einv(v)
            return tuple(spec.emul(inv, u) for u in t)
    raise ValueError("zero triple is not projective")


def _cross(spec: FieldSpec, s, t) -> Triple:
    m, sub = spec.emul, spec.esub
    return (
        sub(m(s[1], t[2]), m(s[2], t[1])),
        sub(m(s[2], t[0]), m(s[0], t[2])),
        sub(m(s[0], t[1]), m(s[1], t[0])),
    )


def line_through(spec: FieldSpec, P: Triple, Q: Triple) -> Triple:
    L = _cross(spec, P, Q)
    if not any(L):
        raise ValueError(f"points {P} and {Q} coincide")
    return canon(spec, L)


def intersect(spec: FieldSpec, l: Triple, m: Triple) -> Triple:
    P = _cross(spec, l, m)
    if not any(P):
        raise ValueError(f"lines {l} and {m} coincide")
    return canon(spec, P)


def incident(spec: FieldSpec, P: Triple, l: Triple) -> bool:
    s = 0
    for a, b in zip(P, l):
        s = spec.eadd(s, spec.emul(a, b))
    return s == 0


def is_affine(P: Triple) -> bool:
    return P[2] != 0


def affine_triple(spec: FieldSpec, x: int, y: int) -> Triple:
    return canon(spec, (x, y, 1))


def affine_coords(spec: FieldSpec, P: Triple) -> tuple:
    """Recover (x, y) encodings from a canonical affine triple."""
    if P[2] == 0:
        raise ValueError(f"{P} lies on the infinite line")
    inv = spec.einv(P[2])
    return spec.emul(P[0], inv), spec.emul(P[1], inv)


def parallel_line(spec: FieldSpec, l: Triple, P: Triple) -> Triple:
    """The line through P sharing l's point at infinity."""
    if l == LINE_INF:
        raise ValueError("the infinite line has no parallel through an affine point")
    d = intersect(spec, l, LINE_INF)
    if d == P:
        raise ValueError("P is the direction of l itself")
    return line_through(spec, d, P)


def direction_of_slope(spec: FieldSpec, s: Optional[int]) -> Triple:
    # slope None encodes the vertical direction
    return DIR_VERTICAL if s is None else (1, s, 0)


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement

    def pair(self) -> tuple:
        return (self.x.enc, self.y.enc)

    def triple(self) -> Triple:
        return affine_triple(self.x.spec, self.x.enc, self.y.enc)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GenericPlane:
    """Pure incidence structure: N points, lines as sorted point-id tuples."""

    q: int
    n_points: int
    lines: tuple
    cyclic: bool = False
    transitive: bool = False
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def lines_through(self, pid: int) -> tuple:
        tab = self._cache.get("through")
        if tab is None:
            tab = [[] for _ in range(self.n_points)]
            for li, line in enumerate(self.lines):
                for p in line:
                    tab[p].append(li)
            tab = tuple(tuple(t) for t in tab)
            self._cache["through"] = tab
        return tab[pid]

    def line_between(self, u: int, v: int) -> Optional[int]:
        pair = self._cache.get("pair")
        if pair is None:
            pair = {}
            for li, line in enumerate(self.lines):
                for i, p in enumerate(line):
                    for r in line[i + 1 :]:
                        pair.setdefault((p, r), li)
            self._cache["pair"] = pair
        if u > v:
            u, v = v, u
        return pair.get((u, v))

    @property
    def max_pencil(self) -> int:
        mp = self._cache.get("max_pencil")
        if mp is None:
            mp = max((len(self.lines_through(p)) for p in range(self.n_points)), default=0)
            self._cache["max_pencil"] = mp
        return mp


@dataclass(frozen=True)
class GenericView:
    """A generic plane plus the coordinate labels it was built from."""

    plane: GenericPlane
    point_triples: tuple
    line_triples: tuple

    def pid(self, P: Triple) -> int:
        idx = self._index()
        return idx[P]

    def _index(self):
        # index map is rebuilt on demand; views are short-lived helpers
        if not hasattr(self, "_idx"):
            object.__setattr__(self, "_idx", {t: i for i, t in enumerate(self.point_triples)})
        return self._idx


class CoordPlane:
    """PG(2,q) or its affine part AG(2,q), with arithmetic incidence tests."""

    def __init__(self, model: str, spec: FieldSpec):
        if model not in ("PG", "AG"):
            raise ValueError(f"unknown plane model {model!r}")
        self.model = model
        self.spec = spec
        self.q = spec.q

    def __repr__(self):
        return f"{self.model}(2,{self.q})"

    def points(self) -> list:
        sp = self.spec
        q = self.q
        pts = [affine_triple(sp, x, y) for x in range(q) for y in range(q)]
        if self.model == "PG":
            pts.append(DIR_VERTICAL)
            pts.extend((1, s, 0) for s in range(q))
        pts.sort()
        return pts

    def lines(self) -> list:
        sp = self.spec
        q = self.q
        ls = []
        for b in range(q):
            for c in range(q):
                ls.append(canon(sp, (1, b, c)))
        for c in range(q):
            ls.append(canon(sp, (0, 1, c)))
        if self.model == "PG":
            ls.append(LINE_INF)
        ls.sort()
        return ls

    def contains(self, P: Triple) -> bool:
        if len(P) != 3 or not all(0 <= v < self.q for v in P) or not any(P):
            return False
        if canon(self.spec, P) != tuple(P):
            return False
        if self.model == "AG" and not is_affine(P):
            return False
        return True

    def line_points(self, l: Triple) -> list:
        out = [P for P in self.points() if incident(self.spec, P, l)]
        return out

    def to_generic(self) -> GenericView:
        pts = self.points()
        index = {P: i for i, P in enumerate(pts)}
        lines = []
        line_triples = []
        for l in self.lines():
            ids = tuple(sorted(index[P] for P in pts if incident(self.spec, P, l)))
            lines.append(ids)
            line_triples.append(l)
        order = sorted(range(len(lines)), key=lambda i: lines[i])
        plane = GenericPlane(
            q=self.q,
            n_points=len(pts),
            lines=tuple(lines[i] for i in order),
            transitive=True,
        )
        return GenericView(plane, tuple(pts), tuple(line_triples[i] for i in order))


def pg_from_field(q: int) -> CoordPlane:
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q={q} is not a prime power")
    return CoordPlane("PG", make_field(*pp))


def ag_from_field(q: int) -> CoordPlane:
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q={q} is not a prime power")
    return CoordPlane("AG", make_field(*pp))


# ---------------------------------------------------------------------------
# axiom checking and file io for generic planes

_MAX_VIOLATIONS = 50


@dataclass
class PlaneReport:
    ok: bool
    points: int
    lines: int
    line_size: Optional[int]
    violations: list


def check_plane_axioms(plane: GenericPlane) -> PlaneReport:
    """Projective-plane sanity report; violations are listed, not raised."""
    v = []
    n = plane.n_points
    lines = plane.lines

    def note(msg):
        if len(v) < _MAX_VIOLATIONS:
            v.append(msg)

    sizes = {len(l) for l in lines}
    line_size = sizes.pop() if len(sizes) == 1 else None
    if line_size is None:
        note("lines are not all the same size")

    seen = {}
    for i, l in enumerate(lines):
        if l in seen:
            note(f"line {i} duplicates line {seen[l]}")
        else:
            seen[l] = i
        for p in l:
            if not 0 <= p < n:
                note(f"line {i} references point {p} outside 0..{n - 1}")

    # each point pair on exactly one line
    pair_count = {}
    for i, l in enumerate(lines):
        for a in range(len(l)):
            for b in range(a + 1, len(l)):
                key = (l[a], l[b])
                pair_count[key] = pair_count.get(key, 0) + 1
    for (a, b), c in pair_count.items():
        if c > 1:
            note(f"points {a},{b} lie on {c} common lines")
    expected = n * (n - 1) // 2
    if len(pair_count) < expected:
        missing = expected - len(pair_count)
        note(f"{missing} point pairs lie on no line")

    # each line pair meets exactly once
    sets = [frozenset(l) for l in lines]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            m = len(sets[i] & sets[j])
            if m != 1:
                note(f"lines {i},{j} meet in {m} points")
                if len(v) >= _MAX_VIOLATIONS:
                    break
        if len(v) >= _MAX_VIOLATIONS:
            break

    if not _has_quadrangle(plane):
        note("no quadrangle: every 4-point subset has 3 collinear points")

    return PlaneReport(ok=not v, points=n, lines=len(lines), line_size=line_size, violations=v)


def _has_quadrangle(plane: GenericPlane) -> bool:
    n = plane.n_points
    if n < 4:
        return False
    for a in range(min(n, 8)):
        for b in range(a + 1, n):
            lab = plane.line_between(a, b)
            for c in range(b + 1, n):
                if plane.line_between(a, c) == lab:
                    continue
                lac = plane.line_between(a, c)
                lbc = plane.line_between(b, c)
                for d in range(c + 1, n):
                    if (
                        plane.line_between(a, d) not in (lab, lac)
                        and plane.line_between(b, d) not in (lab, lbc)
                        and plane.line_between(c, d) not in (lac, lbc)
                    ):
                        return True
    return False


def save_plane(plane: GenericPlane, path) -> None:
    doc = {
        "q": plane.q,
        "points": plane.n_points,
        "lines": [list(l) for l in plane.lines],
    }
    with open(path, "w") as fh:
        fh.write(json.dumps(doc, separators=(",", ":")) + "\n")


def load_plane(path) -> GenericPlane:
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or not {"q", "points", "lines"} <= set(doc):
        raise ValueError("plane file needs keys q, points, lines")
    n = doc["points"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("points must be a positive integer")
    lines = []
    for i, l in enumerate(doc["lines"]):
        if not isinstance(l, list) or not all(isinstance(p, int) for p in l):
            raise ValueError(f"line {i} is not a list of point ids")
        lines.append(tuple(sorted(l)))
    return GenericPlane(q=doc["q"], n_points=n, lines=tuple(lines))
