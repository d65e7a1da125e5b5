"""Construction, classification and search for negacyclic stabilizer codes.

A code of length n over GF(p) is assembled from a canonical factorization
g(X) * h(X, e) of X^n + 1:

* the length must satisfy n | p^(k*m) + 1 with odd quotient, for the chosen
  extension degree k and some m >= 1;
* g is a factor of X^n + 1 over GF(p) that is even in X (g(-X) = g(X)) and
  contains every base-field irreducible factor whose degree is not divisible
  by k;
* h is a factor of (X^n + 1)/g over GF(p^k), even in X, that picks exactly
  one member from each Frobenius orbit of the remaining factors, so that
  g * h * sigma(h) * ... * sigma^{k-1}(h) = X^n + 1;
* a scalar alpha in GF(p)* selects the companion polynomial a(X), the unique
  solution of  a = 1 (mod g),  a = sigma^i(alpha*e) (mod sigma^i(h)).

The companion always lands in GF(p)[X], is even in X, and is fixed by
X -> X^{-1} in the quotient ring; those facts make the pair (g, a*g)
generate a totally isotropic, uniquely negacyclic subspace of
GF(p)^n x GF(p)^n - the stabilizer of an [[n, deg g, d]]_p quantum code.
``construct_code`` re-checks every one of these conditions explicitly and
rejects with the name of the first violated one.

The distance bound d comes from the root exponents of h: the roots of
X^n + 1 are the odd powers of a primitive 2n-th root of unity, and d is one
more than the longest run of consecutive odd exponents among h's roots,
maximized over relabelings of the primitive root.  `search` sweeps lengths,
extension degrees and admissible factorizations to tabulate codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .fields import ExtField, frobenius, validate_odd_prime
from .polyring import (Poly, RingElem, crt_combine, format_poly,
                       frobenius_poly, inverse_x, negate_x, poly_gcd)
from .cyclotomic import (FactorSet, admissible_exponents, factor_xn_plus_one,
                         minimal_t_for_degree, multiplicative_order,
                         negate_coset)


class ConstructionError(ValueError):
    """Raised when a requested code violates one of the named conditions."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        super().__init__(f"violated condition: {condition}"
                         + (f" ({detail})" if detail else ""))


def default_alpha(p: int, k: int) -> int:
    """The scalar used unless a sweep is requested.

    For quadratic extensions this is -1/c_0 mod p (c_0 the constant term of
    the defining polynomial), the choice that makes the code linear; any
    nonzero scalar works otherwise, so 1 is used.
    """
    if k == 2:
        c0 = ExtField(p, 2).c[0]
        return (-pow(c0, p - 2, p)) % p
    return 1


# ---------------------------------------------------------------------------
# admissible factorization enumeration
# ---------------------------------------------------------------------------

def _negation_orbits(cosets, two_n):
    """Group cosets into singletons/pairs under root negation."""
    by_members = {c.members: c for c in cosets}
    orbits, seen = [], set()
    for c in cosets:
        if c.members in seen:
            continue
        nc = negate_coset(c, two_n)
        if nc.members == c.members:
            orbits.append((c,))
            seen.add(c.members)
        else:
            partner = by_members.get(nc.members)
            if partner is None:
                raise AssertionError(
                    "negation image of a coset escaped the candidate set")
            orbits.append((c, partner))
            seen.update((c.members, nc.members))
    return orbits


def _product(field, polys):
    out = Poly.one(field)
    for f in polys:
        out = out * f
    return out


def admissible_g_list(fs_p: FactorSet, k: int) -> list[Poly]:
    """Every admissible base-field factor g for extension degree k.

    A candidate is a product of irreducible factors of X^n + 1 over GF(p)
    that includes each factor whose degree is not divisible by k, and is
    even in X.  Always includes X^n + 1 itself; includes 1 when no factor
    is forced.  Sorted by ascending degree, then text.
    """
    two_n = 2 * fs_p.n
    forced = [(f, c) for f, c in fs_p.factors if c.size % k != 0]
    optional = [(f, c) for f, c in fs_p.factors if c.size % k == 0]
    orbits = _negation_orbits([c for _, c in optional], two_n)
    by_rep = {c.rep: f for f, c in fs_p.factors}
    out = []
    for pick in itertools.product((False, True), repeat=len(orbits)):
        polys = [f for f, _ in forced]
        for take, orbit in zip(pick, orbits):
            if take:
                polys.extend(by_rep[c.rep] for c in orbit)
        g = _product(fs_p.field, polys)
        if negate_x(g) == g:
            out.append(g)
    out.sort(key=lambda g: (g.degree, format_poly(g)))
    return out


def _orbit_transversals(fs_k: FactorSet, rem_cosets):
    """Choices of one coset per Frobenius orbit with negation-stable union.

    Yields tuples of cosets; returns None instead when some orbit is shorter
    than the extension degree (the (g, k) pair is then infeasible).
    """
    p, k = fs_k.frame.p, fs_k.k
    two_n = 2 * fs_k.n
    by_members = {c.members: c for c in rem_cosets}
    # sigma acts on exponent sets as multiplication by p
    orbits, seen = [], set()
    for c in sorted(rem_cosets, key=lambda c: c.rep):
        if c.members in seen:
            continue
        orbit, cur = [], c
        while cur.members not in seen:
            orbit.append(cur)
            seen.add(cur.members)
            nxt = tuple(sorted(e * p % two_n for e in cur.members))
            cur = by_members.get(nxt)
            if cur is None:
                raise AssertionError("Frobenius image of a coset is missing")
        if len(orbit) != k:
            return None
        orbits.append(orbit)
    # pair orbits under negation; coordinate the choices inside a pair
    orbit_key = {min(c.members for c in o): o for o in orbits}
    handled, slots = set(), []
    for key in sorted(orbit_key):
        if key in handled:
            continue
        orbit = orbit_key[key]
        handled.add(key)
        neg_first = negate_coset(orbit[0], two_n)
        partner_key = None
        for k2, o2 in orbit_key.items():
            if any(neg_first.members == c.members for c in o2):
                partner_key = k2
                break
        if partner_key is None:
            raise AssertionError("negation image of an orbit is missing")
        if partner_key == key:
            choices = [(c,) for c in orbit
                       if negate_coset(c, two_n).members == c.members]
        else:
            handled.add(partner_key)
            partner = {c.members: c for c in orbit_key[partner_key]}
            choices = [(c, partner[negate_coset(c, two_n).members])
                       for c in orbit]
        if not choices:
            return iter(())
        slots.append(choices)
    if not slots:
        return iter(((),))
    return (tuple(c for group in sel for c in group)
            for sel in itertools.product(*slots))


def admissible_h_list(fs_k: FactorSet, g: Poly) -> list[Poly]:
    """Every admissible h over GF(p^k) for the given g.

    Products of exactly one factor from each full Frobenius orbit of the
    factors of (X^n + 1)/g, filtered by evenness in X.  Empty when the pair
    (g, k) is infeasible; [1] when g = X^n + 1.
    """
    g_k = g.map_field(fs_k.field) if g.field is not fs_k.field else g
    rem = [c for f, c in fs_k.factors if (g_k % f)]
    trans = _orbit_transversals(fs_k, rem)
    if trans is None:
        return []
    out = []
    for chosen in trans:
        h = _product(fs_k.field,
                     [fs_k.factor_with_coset(c) for c in chosen])
        if negate_x(h) == h:
            out.append(h)
    out.sort(key=lambda h: (h.degree, format_poly(h)))
    return out


# ---------------------------------------------------------------------------
# the companion polynomial
# ---------------------------------------------------------------------------

def build_a(g: Poly, h: Poly, alpha: int, k: int) -> Poly:
    """Chinese-remainder the companion a(X) and coerce it into GF(p)[X].

    Solves a = 1 mod g together with a = sigma^i(alpha*e) mod sigma^i(h)
    for 0 <= i < k over GF(p^k), verifies the solution has base-field
    coefficients and is even in X, and returns it over GF(p).  Failure of
    either verification signals a bug upstream, not bad input.
    """
    field_k = h.field
    p = field_k.p
    if field_k.k != k:
        raise ValueError(f"h must live over GF({p}^{k})")
    base = g.field
    if base.k != 1:
        raise ValueError("g must live over the prime field")
    if alpha % p == 0:
        raise ConstructionError("alpha != 0")

    residues = []
    if g.degree and g.degree > 0:
        residues.append((Poly.one(field_k), g.map_field(field_k)))
    if h.degree and h.degree > 0:
        target = field_k(alpha) * field_k.eta
        cur_h, cur_v = h, target
        for _ in range(k):
            residues.append((Poly.from_elems(field_k, [cur_v]), cur_h))
            cur_h = frobenius_poly(cur_h)
            cur_v = frobenius(cur_v)
    if not residues:
        raise ValueError("g and h cannot both be constant")
    a_ext = crt_combine(residues)

    coeffs = []
    for c in a_ext.coeffs:
        if not field_k.is_prime_coeff(c):
            raise AssertionError(
                "companion polynomial has a coefficient outside GF(p)")
        coeffs.append((c[0],))
    a = Poly(base, coeffs)
    if negate_x(a) != a:
        raise AssertionError("companion polynomial is not even in X")
    return a


# ---------------------------------------------------------------------------
# code specification and verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CodeSpec:
    """A fully verified code construction.

    The stabilizer is generated by the pair (g, a*g) inside
    GF(p)[X]/<X^n+1> x GF(p)[X]/<X^n+1>; `h_exponents` records the root
    exponents of h relative to the frame's primitive 2n-th root.
    """

    p: int
    n: int
    k: int
    m: int
    alpha: int
    g: Poly
    h: Poly
    a: Poly
    h_exponents: tuple

    @property
    def t(self):
        return self.k * self.m

    @property
    def deg_g(self):
        return self.g.degree if self.g else None

    @property
    def field_k(self) -> ExtField:
        return self.h.field

    def generating_pair(self):
        """(g, a*g) as elements of the negacyclic quotient ring."""
        gr = RingElem.from_poly(self.g, self.n)
        ar = RingElem.from_poly(self.a, self.n)
        return gr, ar * gr

    def __repr__(self):
        return (f"CodeSpec(p={self.p}, n={self.n}, k={self.k}, m={self.m}, "
                f"alpha={self.alpha}, g={format_poly(self.g)}, "
                f"h={format_poly(self.h)})")


def is_admissible_exponent(p: int, n: int, t: int) -> bool:
    """Whether n divides p^t + 1 with an odd quotient."""
    return pow(p, t, 2 * n) == (n - 1) % (2 * n)


def _check(cond, name, detail=""):
    if not cond:
        raise ConstructionError(name, detail)


def construct_code(p, n, k, m, g, h, alpha=None) -> CodeSpec:
    """Assemble a CodeSpec, re-checking every defining condition.

    Raises ConstructionError naming the first violated condition; a spec
    that comes back is fully verified.
    """
    validate_odd_prime(p)
    _check(n >= 2 and gcd(n, p) == 1, "gcd(n, p) = 1", f"n={n}")
    _check(k >= 1 and m >= 1, "k >= 1 and m >= 1")
    _check(is_admissible_exponent(p, n, k * m),
           "n | p^(k*m) + 1 with odd quotient",
           f"n={n}, p^{k*m}+1 fails")
    if alpha is None:
        alpha = default_alpha(p, k)
    _check(alpha % p != 0, "alpha != 0")

    base = ExtField(p)
    field_k = ExtField(p, k)
    _check(isinstance(g, Poly) and g.field.k == 1 and g.field.p == p,
           "g is a polynomial over GF(p)")
    _check(isinstance(h, Poly) and h.field.p == p and h.field.k == k,
           f"h is a polynomial over GF(p^{k})")
    _check(g.is_monic(), "g is monic")
    _check(h.is_monic(), "h is monic")
    _check(negate_x(g) == g, "g(-X) = g(X)", format_poly(g))
    _check(negate_x(h) == h, "h(-X, e) = h(X, e)", format_poly(h))

    fs_p = factor_xn_plus_one(p, 1, n)

    for f, c in fs_p.factors:
        if c.size % k != 0:
            _check(not (g % f.map_field(base) if f.field is not base else g % f),
                   "g contains every base-field factor whose degree "
                   "k does not divide",
                   f"missing factor {format_poly(f)}")

    cover = g.map_field(field_k)
    cur = h
    for _ in range(k):
        cover = cover * cur
        cur = frobenius_poly(cur)
    _check(cover == Poly.x_pow_n_plus_one(field_k, n),
           "g * sigma^0(h) * ... * sigma^(k-1)(h) = X^n + 1",
           f"product is {format_poly(cover)}")
    assert (g.degree or 0) + k * (h.degree or 0) == n

    a = build_a(g, h, alpha, k)

    # re-verify the k + 1 congruences by explicit remaindering
    a_ext = a.map_field(field_k)
    if g.degree:
        _check(a_ext % g.map_field(field_k) == Poly.one(field_k),
               "a = 1 (mod g)")
    if h.degree:
        val = field_k(alpha) * field_k.eta
        cur_h = h
        for i in range(k):
            _check(a_ext % cur_h == Poly.from_elems(field_k, [val]),
                   f"a = sigma^{i}(alpha*e) (mod sigma^{i}(h))")
            cur_h = frobenius_poly(cur_h)
            val = frobenius(val)

    ar = RingElem.from_poly(a, n)
    _check(inverse_x(ar) == ar, "a(X^-1) = a(X) in the quotient ring")

    gr = RingElem.from_poly(g, n)
    gr_inv = inverse_x(gr)
    _check(gr * inverse_x(ar) * gr_inv == ar * gr * gr_inv,
           "isotropy identity g(X) a(X^-1) g(X^-1) = a(X) g(X) g(X^-1)")

    # the extension-field factor set is only needed when h has roots
    exps = _h_exponent_set(factor_xn_plus_one(p, k, n), h) if h.degree else ()
    return CodeSpec(p=p, n=n, k=k, m=m, alpha=alpha % p, g=g, h=h, a=a,
                    h_exponents=exps)


def _h_exponent_set(fs_k: FactorSet, h: Poly) -> tuple:
    """Root exponents of h, as the union of its factors' cosets."""
    if not h.degree:
        return ()
    exps = []
    total = 0
    for f, c in fs_k.factors:
        if not (h % f):
            exps.extend(c.members)
            total += c.size
    if total != h.degree:
        raise AssertionError("h is not a product of known factors")
    return tuple(sorted(exps))


# ---------------------------------------------------------------------------
# distance and classification
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bch_cached(exponents, two_n):
    n = two_n // 2
    if not exponents:
        return 1
    best = 0
    for u in range(1, two_n, 2):
        if gcd(u, two_n) != 1:
            continue
        scaled = {e * u % two_n for e in exponents}
        bits = [(2 * i + 1) in scaled for i in range(n)]
        if all(bits):
            best = max(best, n)
            continue
        run = mx = 0
        for b in bits + bits:
            run = run + 1 if b else 0
            if run > mx:
                mx = run
        best = max(best, min(mx, n))
        if best == n:
            break
    return best + 1


def bch_distance(exponents, two_n: int) -> int:
    """One plus the longest cyclic run e, e+2, e+4, ... inside the root set.

    The run is maximized over every relabeling of the primitive 2n-th root,
    i.e. over unit multiples of the exponent set mod 2n.  The empty set has
    distance 1; the full set of odd residues has distance n + 1.
    """
    exponents = tuple(sorted(set(int(e) % two_n for e in exponents)))
    if any(e % 2 == 0 for e in exponents):
        raise ValueError("root exponents of X^n + 1 must be odd")
    return _bch_cached(exponents, two_n)


@dataclass(frozen=True)
class CodeReport:
    """Classified parameters of a constructed code."""

    p: int
    n: int
    k_dim: int
    d_bch: int
    linear: bool
    css_excluded: bool
    spec: CodeSpec
    verification: tuple  # of (check name, bool)

    @property
    def params(self):
        return (self.n, self.k_dim, self.d_bch)

    def params_str(self):
        star = "" if self.linear else "*"
        return f"[[{self.n},{self.k_dim},{self.d_bch}]]_{self.p}{star}"

    def table_key(self):
        return (self.n, self.k_dim, self.d_bch, self.linear)


def _ideal_closure_holds(spec: CodeSpec) -> bool:
    # eta * (g + eta*a*g) = -c0 * a * (g + eta*a*g) in the quotient ring
    # over the quadratic extension: the generating pair spans an ideal.
    field2 = spec.field_k
    n = spec.n
    g2 = RingElem.from_poly(spec.g.map_field(field2), n)
    a2 = RingElem.from_poly(spec.a.map_field(field2), n)
    eta = field2.eta
    w = g2 + (a2 * g2) * eta
    c0 = field2(field2.c[0])
    return w * eta == (a2 * w) * (-c0)


def verify_spec_properties(spec: CodeSpec) -> dict:
    """Re-run every structural identity on a spec; all should pass."""
    results = {}
    results["admissible exponent"] = is_admissible_exponent(
        spec.p, spec.n, spec.t)
    results["g even in X"] = negate_x(spec.g) == spec.g
    results["h even in X"] = negate_x(spec.h) == spec.h
    field_k = spec.field_k
    cover = spec.g.map_field(field_k)
    cur = spec.h
    for _ in range(spec.k):
        cover = cover * cur
        cur = frobenius_poly(cur)
    results["factor cover"] = cover == Poly.x_pow_n_plus_one(field_k, spec.n)
    results["degree bookkeeping"] = (
        (spec.g.degree or 0) + spec.k * (spec.h.degree or 0) == spec.n)
    a_ext = spec.a.map_field(field_k)
    ok = True
    if spec.g.degree:
        ok = a_ext % spec.g.map_field(field_k) == Poly.one(field_k)
    if ok and spec.h.degree:
        val = field_k(spec.alpha) * field_k.eta
        cur_h = spec.h
        for _ in range(spec.k):
            if a_ext % cur_h != Poly.from_elems(field_k, [val]):
                ok = False
                break
            cur_h = frobenius_poly(cur_h)
            val = frobenius(val)
    results["companion congruences"] = ok
    results["a even in X"] = negate_x(spec.a) == spec.a
    ar = RingElem.from_poly(spec.a, spec.n)
    results["a inversion-invariant"] = inverse_x(ar) == ar
    if spec.k == 2:
        # quadratic lane always carries an even exponent
        results["even exponent for k = 2"] = spec.t % 2 == 0
    gr = RingElem.from_poly(spec.g, spec.n)
    gr_inv = inverse_x(gr)
    results["isotropy identity"] = (
        gr * inverse_x(ar) * gr_inv == ar * gr * gr_inv)
    return results


def dual_ideal_check(spec: CodeSpec, rng=None, samples: int = 20) -> dict:
    """For quadratic-extension specs: the dual is an ideal generated by h.

    Up to the conjugate labeling: the companion here satisfies
    a = alpha*e (mod h), so 1 + e*a vanishes modulo sigma(h) rather than h,
    and the ideal the dual equals is generated by sigma(h) - the same
    factorization with the conjugate transversal named h.  Parameters are
    unaffected (sigma scales root exponents by the unit p).

    Three polynomial-level confirmations, no enumeration:

    * gcd(X^n + 1, g + e*a*g) = g*sigma(h) over GF(p^2);
    * sampled dual elements (u, a*u + v*(X^n+1)/g), read as u + e*(...),
      are divisible by sigma(h) in GF(p^2)[X]/<X^n+1>;
    * sampled multiples of sigma(h), split back into coordinate pairs,
      satisfy the dual membership identity u*(ag)(X^-1) = v*g(X^-1).

    Together with the matching cardinalities p^(n+deg g) = p^(2(n-deg h)),
    these witness equality of the dual and the ideal.
    """
    import random
    if spec.k != 2:
        raise ValueError("the dual-ideal identity is specific to k = 2")
    rng = rng or random.Random(0)
    field2 = spec.field_k
    n, p = spec.n, spec.p
    results = {}

    g2 = spec.g.map_field(field2)
    a2 = spec.a.map_field(field2)
    h_dual = frobenius_poly(spec.h)
    eta = field2.eta
    w = (g2 + (a2 * g2) * eta) % Poly.x_pow_n_plus_one(field2, n)
    gcd_val = poly_gcd(Poly.x_pow_n_plus_one(field2, n), w)
    results["gcd(X^n+1, g + e*a*g) = g*sigma(h)"] = (
        gcd_val == (g2 * h_dual).monic())

    xn1 = Poly.x_pow_n_plus_one(spec.g.field, n)
    quot = xn1 // spec.g
    a_ring = RingElem.from_poly(spec.a, n)
    ag_inv = inverse_x(a_ring * RingElem.from_poly(spec.g, n))
    g_inv = inverse_x(RingElem.from_poly(spec.g, n))
    ok_fwd = ok_bwd = True
    base = spec.g.field
    for _ in range(samples):
        u = Poly.from_ints(base, [rng.randrange(p) for _ in range(n)])
        v = Poly.from_ints(base, [rng.randrange(p) for _ in range(n)])
        second = RingElem.from_poly(spec.a * u + v * quot, n)
        # image u + e * second must fall in the ideal
        image = u.map_field(field2) + second.to_poly().map_field(field2) * eta
        if image % h_dual:
            ok_fwd = False
        # a random multiple of the generator, split back, must be dual
        r = Poly.from_elems(field2,
                            [field2((rng.randrange(p), rng.randrange(p)))
                             for _ in range(n)])
        member = RingElem.from_poly(r * h_dual, n)
        u2 = RingElem(base, n, [(c[0],) for c in member.coeffs])
        v2 = RingElem(base, n, [(c[1],) for c in member.coeffs])
        if u2 * ag_inv != v2 * g_inv:
            ok_bwd = False
    results["dual elements divisible by sigma(h)"] = ok_fwd
    results["multiples of sigma(h) are dual"] = ok_bwd
    results["cardinalities match"] = (
        (spec.g.degree or 0) + 2 * (spec.h.degree or 0) == n)
    return results


def classify(spec: CodeSpec) -> CodeReport:
    """Parameters, linearity and CSS-exclusion flags for a spec."""
    k_dim = spec.g.degree or 0
    d = bch_distance(spec.h_exponents, 2 * spec.n)
    linear = spec.k == 2 and _ideal_closure_holds(spec)
    verification = tuple(sorted(verify_spec_properties(spec).items()))
    return CodeReport(p=spec.p, n=spec.n, k_dim=k_dim, d_bch=d,
                      linear=linear, css_excluded=d >= 2, spec=spec,
                      verification=verification)


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def candidate_degrees(p: int, n: int, t_cap=None, include_k1=False) -> list[tuple]:
    """Extension degrees k (with minimal m) worth trying at length n.

    A degree qualifies when some admissible exponent t = k*m exists (within
    t_cap if given) and k divides the degree of at least one base-field
    factor of X^n + 1 - otherwise every factor is forced into g and only
    the degenerate code arises.  Returns [(k, m), ...].

    k = 1 (trivial extension, e = 0) degenerates the whole framework and is
    excluded unless explicitly requested.
    """
    data = admissible_exponents(p, n)
    if data is None:
        return []
    sizes = {c.size for c in
             (coset for _, coset in factor_xn_plus_one(p, 1, n).factors)}
    out = []
    for k in range(1 if include_k1 else 2, max(sizes) + 1):
        if not any(s % k == 0 for s in sizes):
            continue
        t = minimal_t_for_degree(p, n, k)
        if t is None or (t_cap is not None and t > t_cap):
            continue
        out.append((k, t // k))
    return out


def smallest_degenerate_degree(p: int, n: int):
    """Smallest k > 1 admitting any exponent, for the degenerate code."""
    data = admissible_exponents(p, n)
    if data is None:
        return None
    t_min, period = data
    for k in range(2, 2 * (t_min + period) + 2):
        t = minimal_t_for_degree(p, n, k)
        if t is not None:
            return (k, t // k)
    return None


def enumerate_specs(p, n, t_cap=None, k_values=None, alpha_policy="default",
                    include_degenerate=True, on_skip=None):
    """Yield every admissible CodeSpec at one length, deterministically.

    A (k) lane whose working splitting field would exceed the supported
    degree bound is reported through `on_skip(n, k, reason)` rather than
    aborting the whole enumeration.
    """
    from .fields import MAX_DEGREE
    validate_odd_prime(p)
    if gcd(n, p) != 1 or n % 2 or admissible_exponents(p, n) is None:
        return
    if multiplicative_order(p, 2 * n) > MAX_DEGREE:
        if on_skip is not None:
            on_skip(n, None,
                    f"splitting-field degree for length {n} exceeds "
                    f"the supported bound {MAX_DEGREE}")
            return
        raise ValueError(f"splitting field for length {n} is too large")
    if include_degenerate:
        kd = smallest_degenerate_degree(p, n)
        if kd is not None:
            k, m = kd
            field_k = ExtField(p, k)
            yield construct_code(p, n, k, m,
                                 Poly.x_pow_n_plus_one(ExtField(p), n),
                                 Poly.one(field_k),
                                 default_alpha(p, k))
    include_k1 = k_values is not None and 1 in k_values
    degrees = candidate_degrees(p, n, t_cap, include_k1=include_k1)
    for k, m in degrees:
        if k_values is not None and k not in k_values:
            continue
        if alpha_policy == "default":
            alphas = [default_alpha(p, k)]
        elif alpha_policy == "sweep":
            alphas = list(range(1, p))
        else:
            raise ValueError(f"unknown alpha policy {alpha_policy!r}")
        try:
            fs_p = factor_xn_plus_one(p, 1, n)
            fs_k = factor_xn_plus_one(p, k, n, frame=fs_p.frame)
        except ValueError as exc:
            if on_skip is not None:
                on_skip(n, k, str(exc))
                continue
            raise
        for g in admissible_g_list(fs_p, k):
            if g.degree == n:
                continue  # degenerate handled above
            for h in admissible_h_list(fs_k, g):
                for alpha in alphas:
                    yield construct_code(p, n, k, m, g, h, alpha)


def search(p, n_max, t_cap=None, k_values=None, alpha_policy="default",
           n_values=None, progress=None, on_skip=None) -> list[CodeReport]:
    """Classify every admissible code up to length n_max.

    Reports are sorted by (n, k_dim, d, nonlinearity, k, alpha, h) so output
    is deterministic and merge-order independent.
    """
    lengths = n_values if n_values is not None else range(2, n_max + 1, 2)
    reports = []
    for n in lengths:
        if gcd(n, p) != 1:
            continue
        if progress is not None:
            progress(n)
        for spec in enumerate_specs(p, n, t_cap=t_cap, k_values=k_values,
                                    alpha_policy=alpha_policy,
                                    on_skip=on_skip):
            reports.append(classify(spec))
    reports.sort(key=_report_sort_key)
    return reports


def _report_sort_key(r: CodeReport):
    return (r.n, r.k_dim, r.d_bch, not r.linear, r.spec.k, r.spec.alpha,
            format_poly(r.spec.g), format_poly(r.spec.h))


def dedupe_reports(reports) -> list[CodeReport]:
    """First report per (n, k_dim, d, linear) under the deterministic order."""
    seen, out = set(), []
    for r in sorted(reports, key=_report_sort_key):
        key = r.table_key()
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out
