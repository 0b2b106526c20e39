"""Finite fields GF(p^a) with a canonical integer encoding.

Elements are residue polynomials over GF(p) reduced by a fixed monic
irreducible modulus of degree a.  The encoding of an element with
coefficients (c0, c1, ..., c_{a-1}), constant term first, is
sum(c_i * p^i), so encodings run 0..q-1 and sort the same way the
coefficient vectors do when read as base-p numerals.

The modulus is chosen deterministically: the first monic irreducible of
degree a whose non-leading coefficient vector has the smallest encoding.
Every run of every machine therefore agrees on the arithmetic tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

MAX_ORDER = 1 << 20


class DegenerateAlpha(ValueError):
    """Raised when a map is evaluated at an alpha outside its domain."""


class ConjectureViolation(RuntimeError):
    """A search that is expected to succeed on theoretical grounds came up empty."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict:
    """Prime factorization by trial division, {prime: exponent}."""
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int):
    """Return (p, a) when n = p^a for a prime p, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    [(p, a)] = fac.items()
    return p, a


def prime_powers_in(lo: int, hi: int) -> list:
    """All prime powers q with lo <= q <= hi, ascending."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    out = []
    for p in range(2, hi + 1):
        if not sieve[p]:
            continue
        v = p
        while v <= hi:
            if v >= lo:
                out.append(v)
            if v > hi // p:
                break
            v *= p
    out.sort()
    return out


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p), little-endian coefficient tuples


def _trim(t):
    n = len(t)
    while n and t[n - 1] == 0:
        n -= 1
    return t[:n]


def _padd(p, s, t):
    if len(s) < len(t):
        s, t = t, s
    out = list(s)
    for i, c in enumerate(t):
        out[i] = (out[i] + c) % p
    return _trim(tuple(out))


def _pmul(p, s, t):
    if not s or not t:
        return ()
    out = [0] * (len(s) + len(t) - 1)
    for i, a in enumerate(s):
        if a:
            for j, b in enumerate(t):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(tuple(out))


def _pmod(p, s, m):
    # m need not be monic; reduce s modulo m
    s = list(s)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(s) - 1 >= dm and any(s):
        ds = len(s) - 1
        if s[ds] == 0:
            s.pop()
            continue
        c = (s[ds] * inv_lead) % p
        shift = ds - dm
        for i, b in enumerate(m):
            s[shift + i] = (s[shift + i] - c * b) % p
        s.pop()
    return _trim(tuple(s))


def _pgcd(p, s, t):
    while t:
        s, t = t, _pmod(p, s, t)
    if s:
        inv = pow(s[-1], p - 2, p)
        s = tuple((c * inv) % p for c in s)
    return s


def _ppowmod(p, base, e, m):
    r = (1,)
    base = _pmod(p, base, m)
    while e:
        if e & 1:
            r = _pmod(p, _pmul(p, r, base), m)
        base = _pmod(p, _pmul(p, base, base), m)
        e >>= 1
    return r


def _pinv(p, s, m):
    # extended Euclid: find u with u*s = 1 (mod m)
    if not s:
        raise ZeroDivisionError("inverse of zero field element")
    r0, r1 = m, s
    u0, u1 = (), (1,)
    while r1:
        # r0 = q*r1 + r2
        q = []
        r2 = list(r0)
        d1 = len(r1) - 1
        inv_lead = pow(r1[-1], p - 2, p)
        while len(r2) - 1 >= d1 and any(r2):
            d2 = len(r2) - 1
            if r2[d2] == 0:
                r2.pop()
                continue
            c = (r2[d2] * inv_lead) % p
            shift = d2 - d1
            while len(q) <= shift:
                q.append(0)
            q[shift] = c
            for i, b in enumerate(r1):
                r2[shift + i] = (r2[shift + i] - c * b) % p
            r2.pop()
        r2 = _trim(tuple(r2))
        qt = _trim(tuple(q))
        r0, r1 = r1, r2
        u0, u1 = u1, _psub(p, u0, _pmul(p, qt, u1))
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible")
    c = pow(r0[0], p - 2, p)
    return _trim(tuple((x * c) % p for x in u0))


def _psub(p, s, t):
    if len(s) < len(t):
        s = s + (0,) * (len(t) - len(s))
    out = list(s)
    for i, c in enumerate(t):
        out[i] = (out[i] - c) % p
    return _trim(tuple(out))


def _is_irreducible(p: int, f: tuple) -> bool:
    """f monic of degree >= 1.  Root scan for degree <= 3, Rabin test above."""
    deg = len(f) - 1
    if deg == 1:
        return True
    if deg <= 3:
        # reducible iff it has a linear factor
        for x in range(p):
            acc = 0
            for c in reversed(f):
                acc = (acc * x + c) % p
            if acc == 0:
                return False
        return True
    # Rabin: x^(p^deg) == x mod f, and gcd(x^(p^(deg/r)) - x, f) == 1
    # for every prime r dividing deg
    x = (0, 1)
    top = _ppowmod(p, x, p ** deg, f)
    if _psub(p, top, _pmod(p, x, f)):
        return False
    for r in factorize(deg):
        h = _psub(p, _ppowmod(p, x, p ** (deg // r), f), _pmod(p, x, f))
        if len(_pgcd(p, f, h)) != 1:  # nontrivial common factor
            return False
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """Arithmetic context for GF(p^a).  modulus is little-endian, monic, length a+1."""

    p: int
    a: int
    q: int
    modulus: tuple

    def decode(self, enc: int) -> tuple:
        if not 0 <= enc < self.q:
            raise ValueError(f"encoding {enc} out of range for GF({self.q})")
        if self.a == 1:
            return (enc,)
        digits = []
        for _ in range(self.a):
            enc, d = divmod(enc, self.p)
            digits.append(d)
        return tuple(digits)

    def encode(self, coeffs) -> int:
        e = 0
        for c in reversed(coeffs):
            e = e * self.p + c
        return e

    def element(self, enc: int) -> "FieldElement":
        return FieldElement(self, self.decode(enc))

    def from_coeffs(self, coeffs) -> "FieldElement":
        t = tuple(c % self.p for c in coeffs)
        if len(t) > self.a:
            t = _pmod(self.p, t, self.modulus)
        t = t + (0,) * (self.a - len(t))
        return FieldElement(self, t)

    @property
    def zero_el(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.a)

    @property
    def one_el(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.a - 1))

    @property
    def minus_one_el(self) -> "FieldElement":
        return FieldElement(self, (self.p - 1,) + (0,) * (self.a - 1))

    def elements(self) -> Iterator["FieldElement"]:
        for enc in range(self.q):
            yield self.element(enc)

    # enc-level arithmetic, used by the geometry layer

    def eadd(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.p
        s = self.decode(x)
        t = self.decode(y)
        return self.encode(tuple((s[i] + t[i]) % self.p for i in range(self.a)))

    def esub(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x - y) % self.p
        s = self.decode(x)
        t = self.decode(y)
        return self.encode(tuple((s[i] - t[i]) % self.p for i in range(self.a)))

    def eneg(self, x: int) -> int:
        return self.esub(0, x)

    def emul(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x * y) % self.p
        r = _pmod(self.p, _pmul(self.p, self.decode(x), self.decode(y)), self.modulus)
        return self.encode(r + (0,) * (self.a - len(r)))

    def einv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.a == 1:
            return pow(x, self.p - 2, self.p)
        r = _pinv(self.p, _trim(self.decode(x)), self.modulus)
        return self.encode(r + (0,) * (self.a - len(r)))

    def ediv(self, x: int, y: int) -> int:
        return self.emul(x, self.einv(y))


class FieldElement:
    """One element of GF(p^a); immutable, hashable, with operator arithmetic."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple):
        self.spec = spec
        self.coeffs = coeffs

    @property
    def enc(self) -> int:
        return self.spec.encode(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.spec.p, self.spec.a, self.coeffs))

    def __repr__(self):
        return f"GF({self.spec.q}):{self.enc}"

    def _wrap(self, coeffs):
        return FieldElement(self.spec, coeffs + (0,) * (self.spec.a - len(coeffs)))

    def __add__(self, other):
        p = self.spec.p
        return self._wrap(
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        p = self.spec.p
        return self._wrap(
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.spec.p
        return self._wrap(tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        s = self.spec
        if s.a == 1:
            return FieldElement(s, ((self.coeffs[0] * other.coeffs[0]) % s.p,))
        r = _pmod(s.p, _pmul(s.p, self.coeffs, other.coeffs), s.modulus)
        return self._wrap(r)

    def inverse(self) -> "FieldElement":
        s = self.spec
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        if s.a == 1:
            return FieldElement(s, (pow(self.coeffs[0], s.p - 2, s.p),))
        return self._wrap(_pinv(s.p, _trim(self.coeffs), s.modulus))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e: int):
        s = self.spec
        if e < 0:
            return self.inverse() ** (-e)
        if s.a == 1:
            return FieldElement(s, (pow(self.coeffs[0], e, s.p),))
        r = s.one_el
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r


@lru_cache(maxsize=None)
def make_field(p: int, a: int = 1) -> FieldSpec:
    """Construct GF(p^a) with the canonical modulus.

    The degree-a modulus is monic; its lower coefficients are the first
    (by encoding) choice that yields an irreducible polynomial.  For a=1
    the modulus slot holds x itself and is never consulted.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a < 1:
        raise ValueError("a must be positive")
    q = p ** a
    if q > MAX_ORDER:
        raise ValueError(f"field order {q} exceeds supported bound {MAX_ORDER}")
    if a == 1:
        return FieldSpec(p, 1, q, (0, 1))
    tmp = FieldSpec(p, a, q, (0,) * a + (1,))  # encode/decode helper only
    for low_enc in range(1, q):
        low = tmp.decode(low_enc)
        cand = low + (1,)
        if _is_irreducible(p, cand):
            return FieldSpec(p, a, q, cand)
    raise ConjectureViolation(f"no irreducible polynomial of degree {a} over GF({p})")


# ---------------------------------------------------------------------------
# multiplicative structure


def element_order(x: FieldElement) -> int:
    if x.is_zero:
        raise ValueError("order of zero is undefined")
    n = x.spec.q - 1
    if n == 0:
        return 1
    one = x.spec.one_el
    t = n
    for ell in factorize(n):
        while t % ell == 0 and x ** (t // ell) == one:
            t //= ell
    return t


def is_primitive(x: FieldElement, _factors=None) -> bool:
    if x.is_zero:
        return False
    n = x.spec.q - 1
    if n == 1:
        return True  # GF(2): the unit generates the trivial group
    one = x.spec.one_el
    factors = _factors if _factors is not None else tuple(factorize(n))
    for ell in factors:
        if x ** (n // ell) == one:
            return False
    return True


def primitive_iter(spec: FieldSpec) -> Iterator[FieldElement]:
    """Primitive elements in increasing encoding order."""
    factors = tuple(factorize(spec.q - 1)) if spec.q > 2 else ()
    for enc in range(1, spec.q):
        x = spec.element(enc)
        if is_primitive(x, factors):
            yield x


def first_primitive(spec: FieldSpec) -> FieldElement:
    return next(primitive_iter(spec))


# ---------------------------------------------------------------------------
# the two closure maps


def gamma_map(alpha: FieldElement) -> FieldElement:
    """gamma = -alpha / ((1 - alpha) (1 + alpha)^2); defined off {0, 1, -1}."""
    s = alpha.spec
    one = s.one_el
    if alpha.is_zero or alpha == one or alpha == s.minus_one_el:
        raise DegenerateAlpha(f"gamma undefined at alpha={alpha!r}")
    return -alpha / ((one - alpha) * (one + alpha) ** 2)


def gamma_prime_map(alpha: FieldElement) -> FieldElement:
    """gamma' = (alpha - 1) / (alpha + 1)^3.

    In characteristic 2 this collapses to 1/(alpha+1)^2.  Over GF(2) the
    only nonzero alpha is 1 and the map is taken to be 1 there.
    """
    s = alpha.spec
    if s.q == 2:
        if alpha.is_zero:
            raise DegenerateAlpha("gamma' undefined at alpha=0")
        return s.one_el
    one = s.one_el
    if alpha.is_zero or alpha == s.minus_one_el:
        raise DegenerateAlpha(f"gamma' undefined at alpha={alpha!r}")
    return (alpha - one) / (alpha + one) ** 3


def consecutive_primitive_pair(spec: FieldSpec) -> FieldElement:
    """First alpha (by encoding) with alpha and alpha+1 both primitive.

    Only meaningful in even characteristic with a > 1; exhaustion would
    contradict the consecutive-primitive-roots property and raises.
    """
    if spec.p != 2 or spec.a < 2:
        raise ValueError("consecutive pair search needs GF(2^a) with a > 1")
    factors = tuple(factorize(spec.q - 1))
    one = spec.one_el
    for enc in range(2, spec.q):
        alpha = spec.element(enc)
        if is_primitive(alpha, factors) and is_primitive(alpha + one, factors):
            return alpha
    raise ConjectureViolation(f"no consecutive primitive pair in GF({spec.q})")


# ---------------------------------------------------------------------------
# certificate search

ROUTE_ODD_GAMMA = "ODD_GAMMA"
ROUTE_EVEN_GOLOMB = "EVEN_GOLOMB"
ROUTE_BRUTE_SMALL = "BRUTE_SMALL"  # reserved route tag; current searches never emit it
ROUTE_NOT_FOUND = "NOT_FOUND"


@dataclass(frozen=True)
class HypothesisJCertificate:
    """Witness that alpha is primitive and its closure value gamma is too."""

    q: int
    route: str
    alpha: FieldElement
    gamma: FieldElement
    ord_alpha: int
    ord_gamma: int

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "route": self.route,
            "alpha": self.alpha.enc,
            "gamma": self.gamma.enc,
            "ord": self.ord_alpha,
        }


def hypothesis_j_search(q: int) -> Optional[HypothesisJCertificate]:
    """Search GF(q) for a primitive alpha whose closure multiplier is primitive.

    Odd q: walk primitive alpha by encoding, take the first whose gamma is
    primitive.  Even q (a > 1): take the first consecutive primitive pair
    alpha, alpha+1; gamma' = (alpha+1)^-2 is then primitive as well.
    Returns None when no alpha qualifies (q = 3 is the known case).
    """
    pp = prime_power(q)
    if pp is None or q < 3:
        raise ValueError(f"q={q} is not a prime power greater than 2")
    p, a = pp
    spec = make_field(p, a)
    n = q - 1
    factors = tuple(factorize(n))
    if p == 2:
        alpha = consecutive_primitive_pair(spec)
        gamma = gamma_prime_map(alpha)
        if not is_primitive(gamma, factors):
            raise ConjectureViolation(f"gamma' not primitive at q={q}")
        return HypothesisJCertificate(q, ROUTE_EVEN_GOLOMB, alpha, gamma, n, n)
    minus_one = spec.minus_one_el
    for alpha in primitive_iter(spec):
        if alpha == minus_one:
            continue
        gamma = gamma_map(alpha)
        if is_primitive(gamma, factors):
            return HypothesisJCertificate(q, ROUTE_ODD_GAMMA, alpha, gamma, n, n)
    return None


def certificate_line(q: int, cert: Optional[HypothesisJCertificate]) -> str:
    """One JSONL record; a missing certificate becomes a NOT_FOUND row."""
    if cert is None:
        row = {"q": q, "route": ROUTE_NOT_FOUND}
    else:
        row = cert.to_json_dict()
    return json.dumps(row, separators=(",", ":"))
