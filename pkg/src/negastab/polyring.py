"""Polynomial arithmetic over GF(p^k) and the quotient ring GF(q)[X]/<X^n+1>.

A :class:`Poly` stores coefficients as raw coordinate tuples of its base
field (see :mod:`negastab.fields`), constant term first, with no trailing
zero coefficients; the zero polynomial has an empty coefficient sequence and
degree ``None`` (never -1).  A :class:`RingElem` is a representative of
degree < n in the negacyclic quotient ring, stored as exactly n coefficients
and always reduced via X^n = -1.

The substitutions X -> -X and X -> X^{-1} act coefficientwise: negating the
variable scales coefficient j by (-1)^j, and inverting it moves coefficient
j >= 1 to position n-j with negated sign, because X^{-j} = -X^{n-j} in the
quotient ring.

Text format used throughout the toolkit, round-tripping with the parser:

    X^4+(2e+1)*X^2+1      descending powers, `e` the extension generator
    2*X^9+X+2             prime-field coefficients as bare integers
    0                     the zero polynomial
"""

from __future__ import annotations

import re

from .fields import ExtField, FieldElem, format_subfield_coeff, get_embedding


class Poly:
    """Dense polynomial over an :class:`ExtField`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs, normalize=True):
        self.field = field
        if normalize:
            coeffs = list(coeffs)
            while coeffs and not any(coeffs[-1]):
                coeffs.pop()
        self.coeffs = tuple(coeffs)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int_raw(v) for v in ints])

    @classmethod
    def from_elems(cls, field, elems):
        raws = []
        for v in elems:
            v = field(v)
            raws.append(v.coeffs)
        return cls(field, raws)

    @classmethod
    def zero(cls, field):
        return cls(field, (), normalize=False)

    @classmethod
    def one(cls, field):
        return cls(field, (field.one_raw(),), normalize=False)

    @classmethod
    def x(cls, field, power=1):
        return cls(field, [field.zero_raw()] * power + [field.one_raw()],
                   normalize=False)

    @classmethod
    def x_pow_n_plus_one(cls, field, n):
        return cls(field, [field.one_raw()] + [field.zero_raw()] * (n - 1)
                   + [field.one_raw()], normalize=False)

    # -- basic structure -------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i) -> FieldElem:
        if 0 <= i < len(self.coeffs):
            return FieldElem(self.field, self.coeffs[i])
        return self.field.zero

    def lead(self) -> FieldElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElem(self.field, self.coeffs[-1])

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one_raw()

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field is not self.field:
            raise ValueError("polynomials live over different fields")

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = F.add(out[i], bi)
        return Poly(F, out)

    def __sub__(self, other):
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        z = F.zero_raw()
        out = [F.sub(self.coeffs[i] if i < len(self.coeffs) else z,
                     other.coeffs[i] if i < len(other.coeffs) else z)
               for i in range(n)]
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs], normalize=False)

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("scalar from a different field")
            F = self.field
            return Poly(F, [F.mul(c, other.coeffs) for c in self.coeffs])
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        fadd, fmul = F.add, F.mul
        out = [F.zero_raw()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if any(ai):
                for j, bj in enumerate(b):
                    if any(bj):
                        out[i + j] = fadd(out[i + j], fmul(ai, bj))
        return Poly(F, out)

    def __divmod__(self, other):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        fsub, fmul = F.sub, F.mul
        rem = list(self.coeffs)
        oc = other.coeffs
        db = len(oc) - 1
        binv = F.inv(oc[-1])
        quot = [F.zero_raw()] * max(0, len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if any(c):
                q = fmul(c, binv)
                quot[i - db] = q
                base = i - db
                for j in range(db):
                    rem[base + j] = fsub(rem[base + j], fmul(q, oc[j]))
                rem[i] = F.zero_raw()
        return Poly(F, quot), Poly(F, rem[:db] if db else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        if self.is_monic():
            return self
        F = self.field
        inv = F.inv(self.coeffs[-1])
        return Poly(F, [F.mul(c, inv) for c in self.coeffs], normalize=False)

    def __pow__(self, e):
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def evaluate(self, x: FieldElem) -> FieldElem:
        """Horner evaluation at a point of the same field."""
        if x.field is not self.field:
            raise ValueError("evaluation point from a different field")
        F = self.field
        acc = F.zero_raw()
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x.coeffs), c)
        return FieldElem(F, acc)

    def map_field(self, target: ExtField) -> "Poly":
        """Lift coefficients through the fixed embedding into target."""
        emb = get_embedding(self.field, target)
        return Poly(target, [emb.apply(c) for c in self.coeffs],
                    normalize=False)

    def __repr__(self):
        return format_poly(self)


def negate_x(u):
    """The substitution X -> -X on a Poly or RingElem."""
    F = u.field
    out = [c if j % 2 == 0 else F.neg(c) for j, c in enumerate(u.coeffs)]
    if isinstance(u, RingElem):
        return RingElem(F, u.n, out)
    return Poly(F, out, normalize=False)


def frobenius_poly(u: Poly, i: int = 1) -> Poly:
    """Coefficientwise Frobenius x -> x^{p^i} on a polynomial."""
    F = u.field
    return Poly(F, [F.frob(c, i) for c in u.coeffs], normalize=False)


def poly_gcd(u: Poly, v: Poly) -> Poly:
    """Monic greatest common divisor."""
    if not u and not v:
        raise ValueError("gcd(0, 0) is undefined")
    u._check(v)
    a, b = u, v
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(u: Poly, v: Poly):
    """Extended Euclid: returns (g, s, t) with s*u + t*v = g, g monic."""
    if not u and not v:
        raise ValueError("xgcd(0, 0) is undefined")
    u._check(v)
    F = u.field
    r0, r1 = u, v
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_monic():
        return r0, s0, t0
    inv = FieldElem(F, F.inv(r0.coeffs[-1]))
    return r0 * inv, s0 * inv, t0 * inv


def crt_combine(residues) -> Poly:
    """Unique polynomial matching every (value mod modulus) pair.

    Moduli must be pairwise coprime and each value must have smaller degree
    than its modulus; the result has degree < sum of the moduli degrees.
    """
    residues = list(residues)
    if not residues:
        raise ValueError("need at least one residue")
    for v, m in residues:
        if m.degree is None or m.degree == 0:
            raise ValueError("moduli must have positive degree")
        if v and v.degree >= m.degree:
            raise ValueError("residue degree must be below its modulus")
    x, m = residues[0]
    for v2, m2 in residues[1:]:
        g, s, _ = poly_xgcd(m, m2)
        if g.degree != 0:
            raise ValueError(f"moduli are not coprime (gcd {format_poly(g)})")
        # x + m * u == v2 (mod m2) with m*s == g == 1 (mod m2)
        u = (s * (v2 - x)) % m2
        x = x + m * u
        m = m * m2
        x = x % m
    return x


def eval_at(u: Poly, x: FieldElem) -> FieldElem:
    """Evaluate u at a point of an extension of its coefficient field."""
    if x.field is u.field:
        return u.evaluate(x)
    return u.map_field(x.field).evaluate(x)


class RingElem:
    """Element of GF(q)[X]/<X^n+1>, stored as exactly n coefficients."""

    __slots__ = ("field", "n", "coeffs")

    def __init__(self, field, n, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != n:
            raise ValueError(f"need exactly {n} coefficients, got {len(coeffs)}")
        self.field = field
        self.n = n
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, u: Poly, n: int) -> "RingElem":
        """Reduce a polynomial via X^n = -1."""
        F = u.field
        out = [F.zero_raw()] * n
        for j, c in enumerate(u.coeffs):
            if any(c):
                pos = j % n
                if (j // n) % 2:
                    c = F.neg(c)
                out[pos] = F.add(out[pos], c)
        return cls(F, n, out)

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, [field.zero_raw()] * n)

    def to_poly(self) -> Poly:
        return Poly(self.field, self.coeffs)

    def _check(self, other):
        if not isinstance(other, RingElem):
            raise TypeError(f"expected RingElem, got {type(other).__name__}")
        if other.field is not self.field or other.n != self.n:
            raise ValueError("ring elements from different quotient rings")

    def __eq__(self, other):
        return (isinstance(other, RingElem) and self.field is other.field
                and self.n == other.n and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.n, self.coeffs))

    def __bool__(self):
        return any(any(c) for c in self.coeffs)

    def __add__(self, other):
        self._check(other)
        F = self.field
        return RingElem(F, self.n,
                        [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        F = self.field
        return RingElem(F, self.n,
                        [F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        F = self.field
        return RingElem(F, self.n, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("scalar from a different field")
            F = self.field
            return RingElem(F, self.n,
                            [F.mul(c, other.coeffs) for c in self.coeffs])
        self._check(other)
        F, n = self.field, self.n
        if F.k == 1:
            # fast path: plain integer convolution, fold with X^n = -1
            p = F.p
            a = [c[0] for c in self.coeffs]
            b = [c[0] for c in other.coeffs]
            conv = [0] * (2 * n)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        conv[i + j] += ai * bj
            return RingElem(F, n,
                            [((conv[t] - conv[t + n]) % p,) for t in range(n)])
        fadd, fsub, fmul = F.add, F.sub, F.mul
        out = [F.zero_raw()] * n
        for i, ai in enumerate(self.coeffs):
            if any(ai):
                for j, bj in enumerate(other.coeffs):
                    if any(bj):
                        t = i + j
                        prod = fmul(ai, bj)
                        if t >= n:
                            out[t - n] = fsub(out[t - n], prod)
                        else:
                            out[t] = fadd(out[t], prod)
        return RingElem(F, n, out)

    def __repr__(self):
        return format_poly(self.to_poly())


def inverse_x(u: RingElem) -> RingElem:
    """The substitution X -> X^{-1} in the negacyclic ring."""
    F, n = u.field, u.n
    out = [F.zero_raw()] * n
    out[0] = u.coeffs[0]
    for j in range(1, n):
        out[n - j] = F.neg(u.coeffs[j])
    return RingElem(F, n, out)


def ring_pow(u: RingElem, e: int) -> RingElem:
    """u^e by square and multiply (e >= 0)."""
    if e < 0:
        raise ValueError("negative ring exponent")
    result = RingElem.from_poly(Poly.one(u.field), u.n)
    base = u
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def format_poly(u: Poly, var: str = "X") -> str:
    """Canonical text rendering, descending powers, `e` for the generator."""
    if not u.coeffs:
        return "0"
    F = u.field
    parts = []
    for j in range(len(u.coeffs) - 1, -1, -1):
        c = u.coeffs[j]
        if not any(c):
            continue
        if F.is_prime_coeff(c):
            cs = str(c[0])
            trivial = c[0] == 1
        else:
            cs = "(" + format_subfield_coeff(c) + ")"
            trivial = False
        if j == 0:
            parts.append(cs)
        else:
            xs = var if j == 1 else f"{var}^{j}"
            parts.append(xs if trivial else f"{cs}*{xs}")
    return "+".join(parts)


_ETERM_RE = re.compile(r"^(\d+)?(e(\^(\d+))?)?$")


def _parse_subfield_coeff(s, field):
    """Parse an e-polynomial like '2e^2+e+1' into a raw coordinate tuple."""
    coords = [0] * field.k
    for sign, term in _split_signed_terms(s):
        m = _ETERM_RE.match(term.replace("*", ""))
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse field coefficient term {term!r}")
        a = int(m.group(1)) if m.group(1) else 1
        j = 0
        if m.group(2):
            j = int(m.group(4)) if m.group(4) else 1
        if j >= field.k:
            raise ValueError(
                f"e^{j} does not exist in GF({field.p}^{field.k})")
        coords[j] = (coords[j] + sign * a) % field.p
    return tuple(coords)


def _split_signed_terms(s):
    """Split on top-level +/- (outside parentheses), yielding (sign, term)."""
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    terms = []
    depth, start, sign = 0, 0, 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        start = 1
    i = start
    while i <= len(s):
        ch = s[i] if i < len(s) else None
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {s!r}")
        elif (ch in ("+", "-") and depth == 0) or ch is None:
            if i == start:
                raise ValueError(f"empty term in {s!r}")
            terms.append((sign, s[start:i]))
            if ch is not None:
                sign = -1 if ch == "-" else 1
                start = i + 1
        i += 1
    if depth:
        raise ValueError(f"unbalanced parentheses in {s!r}")
    return terms


def parse_poly(s: str, field: ExtField, var: str = "X") -> Poly:
    """Parse the text format back into a polynomial over `field`."""
    s = s.strip()
    if s in ("0", "+0", "-0"):
        return Poly.zero(field)
    coeff_map = {}
    for sign, term in _split_signed_terms(s):
        # split off the variable part
        vpos = term.find(var)
        if vpos >= 0:
            cpart, xpart = term[:vpos], term[vpos:]
            if cpart.endswith("*"):
                cpart = cpart[:-1]
            if xpart == var:
                exp = 1
            elif xpart.startswith(var + "^"):
                exp = int(xpart[len(var) + 1:])
            else:
                raise ValueError(f"cannot parse term {term!r}")
        else:
            cpart, exp = term, 0
        if not cpart:
            raw = field.one_raw()
        elif cpart.startswith("(") and cpart.endswith(")"):
            raw = _parse_subfield_coeff(cpart[1:-1], field)
        elif cpart.isdigit():
            raw = field.from_int_raw(int(cpart))
        else:
            raw = _parse_subfield_coeff(cpart, field)
        if sign < 0:
            raw = field.neg(raw)
        prev = coeff_map.get(exp)
        coeff_map[exp] = field.add(prev, raw) if prev else raw
    deg = max(coeff_map)
    return Poly(field,
                [coeff_map.get(j, field.zero_raw()) for j in range(deg + 1)])
