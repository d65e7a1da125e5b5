"""Factorization of X^n + 1 over GF(p) and GF(p^k) with root bookkeeping.

Everything here revolves around a fixed primitive 2n-th root of unity `beta`
in a splitting field: the roots of X^n + 1 are exactly the odd powers
beta^e, so each irreducible factor over GF(p^k) corresponds to one
p^k-cyclotomic coset of odd residues modulo 2n, and the factor is the
product of (X - beta^e) over its coset, computed in the splitting field and
pulled back to GF(p^k).

`beta` is chosen deterministically: take the fixed multiplicative generator
g0 of the working splitting field and set beta = g0^((order-1)/2n).  The
working field degree is lcm(k, ord_{2n}(p)) so that both the coefficient
field GF(p^k) and the 2n-th roots of unity embed into it; factorizations of
the same X^n + 1 over different coefficient fields share one frame so their
coset labels are mutually consistent.

Admissible lengths: the constructions downstream need n | p^t + 1 with odd
quotient for some exponent t.  Writing the condition as p^t = n - 1 modulo
2n shows the admissible exponents form an arithmetic progression
t_min + j * ord_{2n}(p); helpers expose the minimal exponent overall and the
minimal one divisible by a given extension degree k.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd, lcm

from .fields import ExtField, FieldElem, get_embedding, MAX_DEGREE
from .polyring import Poly, frobenius_poly, format_poly


def multiplicative_order(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    o, x = 1, a % m
    while x != 1:
        x = x * a % m
        o += 1
    return o


def admissible_lengths(p: int, n: int):
    """Least t >= 1 with n | p^t + 1 and odd quotient, or None.

    Scans t = 1 .. ord_{2n}(p), testing p^t = n - 1 (mod 2n); all further
    admissible exponents are t + j * ord_{2n}(p).
    """
    if n < 1:
        raise ValueError("length must be positive")
    if gcd(n, p) != 1:
        raise ValueError(f"gcd(n, p) must be 1, got n={n}, p={p}")
    two_n = 2 * n
    target = (n - 1) % two_n
    period = multiplicative_order(p, two_n) if n > 1 else 1
    x = 1
    for t in range(1, period + 1):
        x = x * p % two_n
        if x == target:
            return t
    return None


def admissible_exponents(p: int, n: int):
    """(t_min, period) such that every admissible t is t_min + j*period."""
    t_min = admissible_lengths(p, n)
    if t_min is None:
        return None
    return t_min, multiplicative_order(p, 2 * n)


def minimal_t_for_degree(p: int, n: int, k: int):
    """Least admissible t divisible by k, or None when no such t exists."""
    data = admissible_exponents(p, n)
    if data is None:
        return None
    t_min, period = data
    for j in range(k):
        t = t_min + j * period
        if t % k == 0:
            return t
    return None


@dataclass(frozen=True)
class Coset:
    """A q-cyclotomic coset of odd residues modulo 2n."""

    members: tuple
    two_n: int

    @property
    def rep(self):
        return self.members[0]

    @property
    def size(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, e):
        return e in self.members

    def __repr__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def odd_cosets(q: int, two_n: int) -> list[Coset]:
    """Partition of the odd residues mod 2n into q-cyclotomic cosets.

    Each coset is closed under e -> q*e and listed by ascending minimal
    representative.
    """
    if two_n < 2 or two_n % 2:
        raise ValueError(f"modulus must be even and >= 2, got {two_n}")
    if gcd(q, two_n) != 1:
        raise ValueError(f"gcd(q, 2n) must be 1, got q={q}, 2n={two_n}")
    seen = set()
    out = []
    for e in range(1, two_n, 2):
        if e in seen:
            continue
        members = []
        x = e
        while x not in seen:
            members.append(x)
            seen.add(x)
            x = x * q % two_n
        out.append(Coset(tuple(sorted(members)), two_n))
    return out


def negate_coset(c: Coset, two_n: int) -> Coset:
    """Root negation at the exponent level: -beta^e = beta^{e+n}."""
    n = two_n // 2
    return Coset(tuple(sorted((e + n) % two_n for e in c.members)), two_n)


def scale_coset(c: Coset, u: int) -> Coset:
    return Coset(tuple(sorted(e * u % c.two_n for e in c.members)), c.two_n)


class RootFrame:
    """A splitting field for X^n + 1 with a pinned primitive 2n-th root.

    `degree` may exceed the minimal splitting degree D = ord_{2n}(p) when a
    larger working field is needed; it is always a multiple of D.
    """

    __slots__ = ("p", "n", "two_n", "D", "degree", "field", "beta",
                 "_beta_pow")

    def __init__(self, p, n, degree=None):
        if gcd(n, p) != 1:
            raise ValueError(f"gcd(n, p) must be 1, got n={n}, p={p}")
        self.p = p
        self.n = n
        self.two_n = 2 * n
        self.D = multiplicative_order(p, self.two_n)
        degree = degree or self.D
        if degree % self.D:
            raise ValueError(
                f"frame degree {degree} is not a multiple of the splitting "
                f"degree {self.D}")
        if degree > MAX_DEGREE:
            raise ValueError(
                f"splitting-field degree {degree} exceeds the supported "
                f"bound {MAX_DEGREE}")
        self.degree = degree
        self.field = ExtField(p, degree)
        g0 = self.field.generator_raw()
        self.beta = self.field.pow_raw(g0, (self.field.order - 1) // self.two_n)
        pows = [self.field.one_raw()]
        for _ in range(self.two_n - 1):
            pows.append(self.field.mul(pows[-1], self.beta))
        self._beta_pow = tuple(pows)

    def beta_power(self, e) -> FieldElem:
        return FieldElem(self.field, self._beta_pow[e % self.two_n])

    def root_product_poly(self, exponents) -> list:
        """Coefficients (raw tuples) of prod (X - beta^e) in the frame field."""
        F = self.field
        coeffs = [F.one_raw()]
        for e in exponents:
            root = self._beta_pow[e % self.two_n]
            nxt = [F.zero_raw()] * (len(coeffs) + 1)
            for j, cj in enumerate(coeffs):
                nxt[j + 1] = cj
            for j, cj in enumerate(coeffs):
                nxt[j] = F.sub(nxt[j], F.mul(root, cj))
            coeffs = nxt
        return coeffs

    def __repr__(self):
        return (f"RootFrame(p={self.p}, n={self.n}, degree={self.degree})")


_FRAMES: dict = {}
_FACTORSETS: dict = {}
_CACHE_LOCK = threading.Lock()


def get_frame(p: int, n: int, degree=None) -> RootFrame:
    """Cached RootFrame per (p, n, working degree)."""
    D = multiplicative_order(p, 2 * n)
    degree = lcm(degree or D, D)
    key = (p, n, degree)
    frame = _FRAMES.get(key)
    if frame is None:
        with _CACHE_LOCK:
            frame = _FRAMES.get(key)
            if frame is None:
                frame = RootFrame(p, n, degree)
                _FRAMES[key] = frame
    return frame


@dataclass(frozen=True)
class FactorSet:
    """Irreducible factors of X^n + 1 over GF(p^k), paired with cosets."""

    frame: RootFrame
    k: int
    field: ExtField  # coefficient field GF(p^k)
    factors: tuple   # of (Poly over GF(p^k), Coset), sorted by coset rep

    @property
    def n(self):
        return self.frame.n

    def polys(self):
        return [f for f, _ in self.factors]

    def coset_of(self, f: Poly) -> Coset:
        for g, c in self.factors:
            if g == f:
                return c
        raise ValueError(f"{format_poly(f)} is not a factor in this set")

    def factor_with_coset(self, c: Coset) -> Poly:
        for g, d in self.factors:
            if d.members == c.members:
                return g
        raise ValueError(f"no factor with coset {c}")


def factor_xn_plus_one(p: int, k: int, n: int, frame: RootFrame = None) -> FactorSet:
    """Factor X^n + 1 over GF(p^k), exactly, with coset annotations.

    Each p^k-cyclotomic coset C of odd residues mod 2n yields the factor
    prod_{e in C} (X - beta^e), computed in the splitting field and pulled
    back through the subfield embedding; the factors are monic, irreducible,
    and multiply back to X^n + 1 (verified).
    """
    if gcd(n, p) != 1:
        raise ValueError(f"gcd(n, p) must be 1, got n={n}, p={p}")
    D = multiplicative_order(p, 2 * n)
    required = lcm(k, D)
    if frame is None or frame.degree % required:
        frame = get_frame(p, n, required)
    key = (p, k, n, frame.degree)
    fs = _FACTORSETS.get(key)
    if fs is not None:
        return fs

    coeff_field = ExtField(p, k)
    emb = get_embedding(coeff_field, frame.field)
    factors = []
    q = p ** k
    for coset in odd_cosets(q, 2 * n):
        big_coeffs = frame.root_product_poly(coset.members)
        try:
            small = [emb.pull_back(c) for c in big_coeffs]
        except ArithmeticError as exc:
            raise AssertionError(
                f"factor for coset {coset} has coefficients outside "
                f"GF({p}^{k})") from exc
        poly = Poly(coeff_field, small)
        if poly.degree != coset.size or not poly.is_monic():
            raise AssertionError(f"malformed factor for coset {coset}")
        factors.append((poly, coset))
    factors.sort(key=lambda fc: fc[1].rep)

    product = Poly.one(coeff_field)
    for f, _ in factors:
        product = product * f
    if product != Poly.x_pow_n_plus_one(coeff_field, n):
        raise AssertionError(f"factor product differs from X^{n}+1")

    fs = FactorSet(frame, k, coeff_field, tuple(factors))
    with _CACHE_LOCK:
        return _FACTORSETS.setdefault(key, fs)


def sigma_orbit(fs: FactorSet, f: Poly) -> list[Poly]:
    """Orbit [f, sigma(f), ...] of a factor under coefficientwise Frobenius.

    On cosets, sigma scales the exponent set by p; both routes are kept in
    lockstep as a consistency check.
    """
    by_poly = {g: c for g, c in fs.factors}
    if f not in by_poly:
        raise ValueError(f"{format_poly(f)} is not a factor in this set")
    orbit = [f]
    coset = by_poly[f]
    cur = f
    while True:
        cur = frobenius_poly(cur)
        coset = scale_coset(coset, fs.frame.p)
        if cur == f:
            break
        if cur not in by_poly:
            raise AssertionError("Frobenius image is not a factor")
        if by_poly[cur].members != coset.members:
            raise AssertionError("coset route disagrees with coefficient route")
        orbit.append(cur)
    return orbit
