"""Exact arithmetic in GF(p) and its extensions GF(p^k), p an odd prime.

Elements of GF(p^k) are represented in the polynomial basis 1, e, ..., e^{k-1}
where e is the residue of Y modulo a monic irreducible defining polynomial
c(Y) of degree k over GF(p).  An element is stored as a tuple of k integers
in [0, p), constant coordinate first.  Tuples are immutable, so field values
can be shared freely between threads and cached without copying.

The defining polynomial for a given (p, k) is chosen deterministically as the
first monic irreducible of degree k when coefficient tuples are ordered with
the high-degree coefficients most significant (so Y^2+1, Y^2+2, Y^3+2 and
friends win over denser polynomials).  Subfield embeddings are equally
deterministic: GF(p^k) embeds into GF(p^D) (k | D) by sending e to the
lexicographically smallest root of c(Y) in the bigger field, and the chosen
embedding is cached once per field pair.

Supported sizes: odd primes p < 2^16 and extension degrees up to 64.
"""

from __future__ import annotations

import itertools
import threading
from math import gcd

import sympy

MAX_PRIME = 1 << 16
MAX_DEGREE = 64

# Subgroup scans (root finding for embeddings, generator search) refuse above
# this many candidate elements; covers every size the toolkit constructs.
_SCAN_LIMIT = 1 << 24


def validate_odd_prime(p: int) -> int:
    """Check that p is an odd prime in the supported range and return it."""
    if not isinstance(p, int):
        raise TypeError(f"prime modulus must be an int, got {type(p).__name__}")
    if p >= MAX_PRIME:
        raise ValueError(f"prime modulus {p} exceeds the supported bound 2^16")
    if p < 3 or p % 2 == 0 or not sympy.isprime(p):
        raise ValueError(f"modulus must be an odd prime >= 3, got {p}")
    return p


# ---------------------------------------------------------------------------
# dense polynomial helpers over GF(p), used only for defining-polynomial work
# (coefficient lists, constant term first, no trailing zeros)
# ---------------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for j in range(df):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a[:df])


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), f, p)
    return result


def _pgcd(a, b, p):
    # Euclid with monic normalization of the divisor
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _is_irreducible_poly(c, p):
    """Rabin irreducibility test for the monic polynomial Y^k + ... + c[0]."""
    k = len(c)
    if k == 1:
        return True
    if c[0] == 0:
        return False
    f = list(c) + [1]
    # iterate Y^{p^j} mod f; j = k must give Y, j = k/q must be coprime with f
    checkpoints = {k // q for q in sympy.primefactors(k)}
    xp = [0, 1]
    frob = _ppowmod(xp, p, f, p)
    cur = frob
    for j in range(1, k + 1):
        if j in checkpoints:
            diff = _ptrim([(ci - xi) % p for ci, xi in
                           itertools.zip_longest(cur, xp, fillvalue=0)])
            if len(_pgcd(diff, f, p)) != 1:
                return False
        if j < k:
            cur = _ppowmod(cur, p, f, p)
    diff = _ptrim([(ci - xi) % p for ci, xi in
                   itertools.zip_longest(cur, xp, fillvalue=0)])
    return not diff


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over GF(p) in the fixed scan order.

    Candidates are ordered with the top coefficient most significant and the
    constant term least significant, so the result is as sparse as possible:
    (3, 2) gives Y^2+1 and (5, 2) gives Y^2+2.  Returns the low coefficients
    (c_0, ..., c_{k-1}); the leading 1 is implicit.  Deterministic across runs.
    """
    validate_odd_prime(p)
    if not 1 <= k <= MAX_DEGREE:
        raise ValueError(f"extension degree must be in [1, {MAX_DEGREE}], got {k}")
    if k == 1:
        return (0,)
    # scan with the high coefficients varying slowest, so sparse polynomials
    # like Y^2+1 and Y^2+2 are preferred; constant term 0 gives the factor Y
    for t in itertools.product(range(p), repeat=k):
        c = t[::-1]
        if c[0] == 0:
            continue
        if _is_irreducible_poly(list(c), p):
            return c
    raise AssertionError("no irreducible found")  # impossible


class ExtField:
    """The field GF(p^k) with a fixed defining polynomial.

    Instances are interned per (p, k, c) and immutable; arithmetic methods
    on raw coefficient tuples (`add`, `mul`, ...) form the fast kernel -
    rebound per instance to degree-specialized closures - while
    :class:`FieldElem` provides an operator interface on top of it.
    """

    _instances: dict = {}
    _instances_lock = threading.Lock()

    def __new__(cls, p, k=1, c=None):
        validate_odd_prime(p)
        if not 1 <= k <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in [1, {MAX_DEGREE}], got {k}")
        if c is None:
            c = find_irreducible(p, k)
        c = tuple(int(x) % p for x in c)
        if len(c) != k:
            raise ValueError(f"defining polynomial must have degree {k}")
        key = (p, k, c)
        with cls._instances_lock:
            inst = cls._instances.get(key)
            if inst is None:
                inst = super().__new__(cls)
                inst._init(p, k, c)
                cls._instances[key] = inst
        return inst

    def _init(self, p, k, c):
        if k > 1 and not _is_irreducible_poly(list(c), p):
            raise ValueError(f"defining polynomial {c} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.c = c
        self.order = p ** k
        self._lock = threading.RLock()
        self._order_factors = None
        self._generator = None
        # reduction table: red[j] = coordinates of e^{k+j}, j = 0 .. k-2
        red = []
        cur = tuple((-x) % p for x in c)  # e^k = -c(e) + e^k... = -(c_0 + ... )
        red.append(cur)
        for _ in range(k - 2):
            shifted = (0,) + cur[:-1]
            top = cur[-1]
            if top:
                shifted = tuple((s - top * ci) % p for s, ci in zip(shifted, c))
            cur = shifted
            red.append(cur)
        self._red = tuple(red)
        self._specialize_kernels()
        # rows of the Frobenius map: image of e^j under x -> x^p
        ep = self.pow_raw(self.unit_raw(1), p) if k > 1 else (1,)
        rows = [self.one_raw()]
        for _ in range(k - 1):
            rows.append(self.mul(rows[-1], ep))
        self._frob_rows = tuple(rows)

    def _specialize_kernels(self):
        """Bind degree-specialized add/sub/mul closures over the instance."""
        p, k = self.p, self.k
        if k == 1:
            self.add = lambda a, b: ((a[0] + b[0]) % p,)
            self.sub = lambda a, b: ((a[0] - b[0]) % p,)
            self.mul = lambda a, b: ((a[0] * b[0]) % p,)
            self.neg = lambda a: ((-a[0]) % p,)
        elif k == 2:
            r0, r1 = self._red[0]

            def add2(a, b):
                return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)

            def sub2(a, b):
                return ((a[0] - b[0]) % p, (a[1] - b[1]) % p)

            def mul2(a, b):
                a0, a1 = a
                b0, b1 = b
                hi = a1 * b1
                return ((a0 * b0 + hi * r0) % p,
                        (a0 * b1 + a1 * b0 + hi * r1) % p)

            self.add, self.sub, self.mul = add2, sub2, mul2
            self.neg = lambda a: ((-a[0]) % p, (-a[1]) % p)
        else:
            red = self._red
            rng = range(k)

            def addk(a, b):
                return tuple((x + y) % p for x, y in zip(a, b))

            def subk(a, b):
                return tuple((x - y) % p for x, y in zip(a, b))

            def mulk(a, b):
                prod = [0] * (2 * k - 1)
                for i, ai in enumerate(a):
                    if ai:
                        for j, bj in enumerate(b):
                            prod[i + j] += ai * bj
                out = [x % p for x in prod[:k]]
                for j in range(k - 1):
                    h = prod[k + j] % p
                    if h:
                        row = red[j]
                        for i in rng:
                            out[i] = (out[i] + h * row[i]) % p
                return tuple(out)

            self.add, self.sub, self.mul = addk, subk, mulk
            if self.order <= 2048:
                # small enough for full pairwise lookup tables
                elems = list(itertools.product(range(p), repeat=k))
                mul_t = {(a, b): mulk(a, b) for a in elems for b in elems}
                add_t = {(a, b): addk(a, b) for a in elems for b in elems}
                sub_t = {(a, b): subk(a, b) for a in elems for b in elems}
                self.mul = lambda a, b: mul_t[a, b]
                self.add = lambda a, b: add_t[a, b]
                self.sub = lambda a, b: sub_t[a, b]
            elif k > 8:
                # Kronecker substitution: pack coefficient vectors into one
                # integer so the convolution is a single big-int multiply
                worst = k * (p - 1) ** 2 * (1 + (p - 1) * (k - 1))
                bits = worst.bit_length() + 1
                mask = (1 << bits) - 1

                def pack(t):
                    v = 0
                    for c in reversed(t):
                        v = (v << bits) | c
                    return v

                red_packed = [pack(row) for row in red]
                kbits = k * bits

                def mul_kron(a, b, _pack=pack, _bits=bits, _mask=mask,
                             _kb=kbits, _red=red_packed, _k=k, _p=p):
                    prod = _pack(a) * _pack(b)
                    acc = prod & ((1 << _kb) - 1)
                    hi = prod >> _kb
                    j = 0
                    while hi:
                        h = hi & _mask
                        if h:
                            acc += h * _red[j]
                        hi >>= _bits
                        j += 1
                    return tuple(((acc >> (_bits * i)) & _mask) % _p
                                 for i in range(_k))

                self.mul = mul_kron

    # -- raw-tuple kernel ---------------------------------------------------

    def zero_raw(self):
        return (0,) * self.k

    def one_raw(self):
        return (1,) + (0,) * (self.k - 1)

    def unit_raw(self, j):
        """Coordinate tuple of e^j for 0 <= j < k."""
        t = [0] * self.k
        t[j] = 1
        return tuple(t)

    def from_int_raw(self, v):
        return (v % self.p,) + (0,) * (self.k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def scale(self, a, s):
        p = self.p
        s %= p
        return tuple((x * s) % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = [x % p for x in prod[:k]]
        red = self._red
        for j in range(k - 1):
            h = prod[k + j] % p
            if h:
                row = red[j]
                for i in range(k):
                    out[i] = (out[i] + h * row[i]) % p
        return tuple(out)

    def pow_raw(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one_raw()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError(f"division by zero in GF({self.p}^{self.k})")
        if self.k == 1:
            return (pow(a[0], self.p - 2, self.p),)
        return self.pow_raw(a, self.order - 2)

    def frob(self, a, i=1):
        """Raw Frobenius x -> x^{p^i}."""
        i %= self.k
        for _ in range(i):
            out = self.zero_raw()
            for j, aj in enumerate(a):
                if aj:
                    out = self.add(out, self.scale(self._frob_rows[j], aj))
            a = out
        return a

    def is_prime_coeff(self, a):
        """True when a lies in the prime subfield GF(p)."""
        return not any(a[1:])

    # -- element construction ------------------------------------------------

    def __call__(self, value):
        """Coerce an int, coordinate sequence or FieldElem into this field."""
        if isinstance(value, FieldElem):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElem(self, self.from_int_raw(value))
        coeffs = tuple(int(x) % self.p for x in value)
        if len(coeffs) > self.k:
            raise ValueError(f"too many coordinates for GF({self.p}^{self.k})")
        coeffs += (0,) * (self.k - len(coeffs))
        return FieldElem(self, coeffs)

    @property
    def zero(self):
        return FieldElem(self, self.zero_raw())

    @property
    def one(self):
        return FieldElem(self, self.one_raw())

    @property
    def eta(self):
        """The distinguished generator e (residue of Y)."""
        if self.k == 1:
            return self.zero
        return FieldElem(self, self.unit_raw(1))

    def elements(self):
        """Iterate all p^k elements in lexicographic coordinate order."""
        for t in itertools.product(range(self.p), repeat=self.k):
            yield FieldElem(self, t)

    # -- multiplicative structure ---------------------------------------------

    def order_factors(self):
        """Prime factorization of p^k - 1, computed once per field."""
        if self._order_factors is None:
            with self._lock:
                if self._order_factors is None:
                    self._order_factors = dict(sympy.factorint(self.order - 1))
        return self._order_factors

    def element_order_raw(self, a):
        if not any(a):
            raise ZeroDivisionError("the zero element has no multiplicative order")
        n = self.order - 1
        o = n
        for q in self.order_factors():
            while o % q == 0 and self.pow_raw(a, o // q) == self.one_raw():
                o //= q
        return o

    def generator_raw(self):
        """Lexicographically smallest multiplicative generator."""
        if self._generator is None:
            with self._lock:
                if self._generator is None:
                    n = self.order - 1
                    for t in itertools.product(range(self.p), repeat=self.k):
                        if not any(t):
                            continue
                        if self.element_order_raw(t) == n:
                            self._generator = t
                            break
        return self._generator

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (ExtField, (self.p, self.k, self.c))


class FieldElem:
    """An element of an :class:`ExtField`, immutable and hashable.

    Arithmetic is via the usual operators; mixing elements of different
    fields raises ValueError, division by zero raises ZeroDivisionError.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError(
                    f"cannot mix elements of {self.field} and {other.field}")
            return other.coeffs
        if isinstance(other, int):
            return self.field.from_int_raw(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, self.field.add(self.coeffs, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, self.field.sub(self.coeffs, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, self.field.sub(o, self.coeffs))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, self.field.mul(self.coeffs, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, self.field.mul(self.coeffs, self.field.inv(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, self.field.mul(o, self.field.inv(self.coeffs)))

    def __pow__(self, e):
        return FieldElem(self.field, self.field.pow_raw(self.coeffs, e))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field.from_int_raw(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return format_subfield_coeff(self.coeffs)

    def lift_int(self):
        """The integer representative, defined for prime-subfield elements."""
        if not self.field.is_prime_coeff(self.coeffs):
            raise ValueError(f"{self!r} does not lie in the prime subfield")
        return self.coeffs[0]


def format_subfield_coeff(coeffs) -> str:
    """Render a coordinate tuple as a polynomial in e, e.g. '2e^2+e+1'."""
    terms = []
    for j in range(len(coeffs) - 1, -1, -1):
        a = coeffs[j]
        if not a:
            continue
        if j == 0:
            terms.append(str(a))
        else:
            head = "" if a == 1 else str(a)
            terms.append(f"{head}e" + (f"^{j}" if j > 1 else ""))
    return "+".join(terms) if terms else "0"


def field_arith(x: FieldElem, y: FieldElem, op: str) -> FieldElem:
    """Named dispatcher over the four field operations ('add'..'div')."""
    try:
        fn = {"add": x.__add__, "sub": x.__sub__,
              "mul": x.__mul__, "div": x.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(y)


def frobenius(x: FieldElem, i: int = 1) -> FieldElem:
    """The i-fold Frobenius automorphism x -> x^{p^i}."""
    if i < 0:
        raise ValueError("Frobenius exponent must be nonnegative")
    return FieldElem(x.field, x.field.frob(x.coeffs, i))


def element_order(x: FieldElem) -> int:
    """Least e >= 1 with x^e = 1; divides p^k - 1."""
    return x.field.element_order_raw(x.coeffs)


def multiplicative_generator(field: ExtField) -> FieldElem:
    """Deterministic generator of the multiplicative group."""
    return FieldElem(field, field.generator_raw())


# ---------------------------------------------------------------------------
# subfield embeddings
# ---------------------------------------------------------------------------

class Embedding:
    """The fixed ring embedding GF(p^k) -> GF(p^D) for k | D.

    Determined by the image `rho` of the small field's generator e: the
    lexicographically smallest root of the small defining polynomial inside
    the big field.  `matrix` holds the images of the basis 1, e, ..., e^{k-1}
    so that applying the embedding is a coordinate substitution.
    """

    __slots__ = ("src", "dst", "rho", "matrix", "_solve_rows", "_pivots")

    def __init__(self, src, dst, rho):
        self.src = src
        self.dst = dst
        self.rho = rho
        rows = [dst.one_raw()]
        for _ in range(src.k - 1):
            rows.append(dst.mul(rows[-1], rho))
        self.matrix = tuple(rows)
        self._solve_rows = None
        self._pivots = None

    def apply(self, coeffs):
        dst = self.dst
        out = dst.zero_raw()
        for j, aj in enumerate(coeffs):
            if aj:
                out = dst.add(out, dst.scale(self.matrix[j], aj))
        return out

    def _prepare_solver(self):
        # row-reduce the k x D matrix over GF(p) once, remembering operations
        p = self.src.p
        k, D = self.src.k, self.dst.k
        aug = [list(self.matrix[i]) + [1 if j == i else 0 for j in range(k)]
               for i in range(k)]
        pivots = []
        r = 0
        for col in range(D):
            piv = next((i for i in range(r, k) if aug[i][col]), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = pow(aug[r][col], p - 2, p)
            aug[r] = [(x * inv) % p for x in aug[r]]
            for i in range(k):
                if i != r and aug[i][col]:
                    f = aug[i][col]
                    aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
            pivots.append(col)
            r += 1
            if r == k:
                break
        if r != k:
            raise AssertionError("embedding matrix lost rank")  # impossible
        self._solve_rows = [row[D:] for row in aug]
        self._pivots = pivots

    def pull_back(self, coeffs):
        """Invert the embedding; raises if coeffs is outside the image."""
        if self._solve_rows is None:
            self._prepare_solver()
        p = self.src.p
        x = [0] * self.src.k
        for row, col in zip(self._solve_rows, self._pivots):
            v = coeffs[col]
            if v:
                for j in range(self.src.k):
                    x[j] = (x[j] + v * row[j]) % p
        x = tuple(x)
        if self.apply(x) != tuple(coeffs):
            raise ArithmeticError(
                "coefficient does not lie in the embedded subfield")
        return x


_EMBEDDINGS: dict = {}
_EMBED_LOCK = threading.Lock()


def get_embedding(src: ExtField, dst: ExtField) -> Embedding:
    """Cached deterministic embedding of src into dst (same p, src.k | dst.k)."""
    if src.p != dst.p:
        raise ValueError("embedding requires the same characteristic")
    if dst.k % src.k != 0:
        raise ValueError(
            f"degree {src.k} does not divide {dst.k}; no embedding exists")
    key = (src.p, src.k, src.c, dst.k, dst.c)
    emb = _EMBEDDINGS.get(key)
    if emb is not None:
        return emb
    with _EMBED_LOCK:
        emb = _EMBEDDINGS.get(key)
        if emb is None:
            emb = Embedding(src, dst, _find_root(src, dst))
            _EMBEDDINGS[key] = emb
    return emb


# -- minimal dense polynomial helpers over an ExtField (lists of raw tuples,
#    constant term first, no trailing zeros), used only for root finding

def _fptrim(a):
    while a and not any(a[-1]):
        a.pop()
    return a


def _fpmul(a, b, F):
    if not a or not b:
        return []
    out = [F.zero_raw()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if any(ai):
            for j, bj in enumerate(b):
                if any(bj):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _fptrim(out)


def _fpmod(a, f, F):
    # f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if any(c):
            for j in range(df):
                a[i - df + j] = F.sub(a[i - df + j], F.mul(c, f[j]))
            a[i] = F.zero_raw()
    return _fptrim(a[:df])


def _fppowmod(a, e, f, F):
    result = [F.one_raw()]
    base = _fpmod(a, f, F)
    while e:
        if e & 1:
            result = _fpmod(_fpmul(result, base, F), f, F)
        e >>= 1
        if e:
            base = _fpmod(_fpmul(base, base, F), f, F)
    return result


def _fpmonic(a, F):
    if a and a[-1] != F.one_raw():
        inv = F.inv(a[-1])
        a = [F.mul(c, inv) for c in a]
    return a


def _fpgcd(a, b, F):
    a, b = _fptrim(list(a)), _fptrim(list(b))
    while b:
        b = _fpmonic(b, F)
        a, b = b, _fpmod(a, b, F)
    return _fpmonic(a, F)


def _fpshift(f, s, F):
    """f(Y + s), by repeated synthetic division."""
    f = list(f)
    n = len(f)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            f[j] = F.add(f[j], F.mul(s, f[j + 1]))
    return f


def _find_root(src, dst):
    """Lex-smallest root of src's defining polynomial inside dst.

    The polynomial splits into distinct linear factors over dst, so a root
    is isolated by deterministic square-root-of-unity splitting: for shifts
    s in lexicographic order, gcd(Y^{(q-1)/2} - 1 mod f(Y+s), f(Y+s)) cuts
    f down until a linear factor remains.  All roots are then recovered as
    Frobenius conjugates of the found one and the smallest is returned, so
    the choice does not depend on the splitting path.
    """
    if src.k == 1:
        return dst.zero_raw()  # c(Y) = Y, root 0
    if src is dst or (src.k == dst.k and src.c == dst.c):
        return dst.unit_raw(1)
    f = _fpmonic([dst.from_int_raw(c) for c in src.c] + [dst.one_raw()], dst)
    half = (dst.order - 1) // 2
    while len(f) > 2:
        found = None
        for s_tuple in itertools.product(range(dst.p), repeat=dst.k):
            s = tuple(s_tuple)
            fs = _fpshift(f, s, dst)
            r = _fppowmod([dst.zero_raw(), dst.one_raw()], half, fs, dst)
            r = list(r)
            if r:
                r[0] = dst.sub(r[0], dst.one_raw())
            else:
                r = [dst.neg(dst.one_raw())]
            g = _fpgcd(r, fs, dst)
            if 1 < len(g) < len(fs):
                part = g if len(g) <= len(fs) - len(g) + 1 else \
                    _fptrim(_fpdiv_exact(fs, g, dst))
                found = _fpshift(part, dst.neg(s), dst)
                break
        if found is None:
            raise AssertionError(
                "deterministic splitting failed to separate the roots")
        f = _fpmonic(found, dst)
    first = dst.neg(f[0])  # monic linear Y + c0 has root -c0
    roots = [first]
    for _ in range(src.k - 1):
        roots.append(dst.frob(roots[-1]))
    return min(roots)


def _fpdiv_exact(a, b, F):
    # exact quotient of monic b dividing a
    a = list(a)
    db = len(b) - 1
    quot = [F.zero_raw()] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if any(c):
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]))
    return quot


def embed(x: FieldElem, target: ExtField) -> FieldElem:
    """Image of x under the fixed embedding of its field into target."""
    emb = get_embedding(x.field, target)
    return FieldElem(target, emb.apply(x.coeffs))


def pull_back(x: FieldElem, source: ExtField) -> FieldElem:
    """Preimage of x in the subfield `source`; error if x is outside it."""
    emb = get_embedding(source, x.field)
    return FieldElem(source, emb.pull_back(x.coeffs))
