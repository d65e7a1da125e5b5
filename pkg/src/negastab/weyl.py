"""Dense numerical realization of the shift/phase operator picture.

On the p^n-dimensional state space with computational basis indexed by
GF(p)^n, the operator W(a, b) = omega^{w(a.b)} U_a V_b acts by
U_a |x> = |x + a> and V_b |x> = zeta^{b.x} |x>, where zeta = exp(2 pi i / p).

The phase weight w = (p+1)/2 (the inverse of 2 mod p) makes the map
(a, b) -> W(a, b) a genuine group homomorphism on every totally isotropic
subspace: with any other weight, products of commuting W's pick up stray
phases and the summed operator fails to be idempotent.  It is the odd-p
analogue of using a primitive 4th root for p = 2.  The normalized sum
P = |S|^{-1} sum_{(a,b) in S} W(a, b) is then the orthogonal projector onto
the joint fixed space, with trace p^n / |S|.

Basis indexing is little-endian base p: index(x) = sum x_j p^j.  All checks
report max-entry residual norms against explicit tolerances; matrices are
capped at 243 dimensions by default, enough for every desk-scale check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .construct import CodeSpec
from .oracle import enumerate_S, negacyclic_shift

DEFAULT_DIM_CAP = 243
TOL_STRUCTURAL = 1e-12
TOL_AGGREGATE = 1e-9
TOL_TRACE = 1e-6


class DimensionCapExceeded(RuntimeError):
    def __init__(self, dim, cap):
        self.dim = dim
        self.cap = cap
        super().__init__(
            f"state-space dimension {dim} exceeds the cap {cap}; pass a "
            f"larger cap explicitly to force a dense build")


def _check_cap(p, n, cap):
    dim = p ** n
    if dim > cap:
        raise DimensionCapExceeded(dim, cap)
    return dim


def _indices(p, n):
    """All of GF(p)^n as an array of digit rows, row index = basis index."""
    idx = np.arange(p ** n, dtype=np.int64)
    cols = []
    for _ in range(n):
        cols.append(idx % p)
        idx //= p
    return np.stack(cols, axis=1)


def weyl(p: int, a, b, cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Matrix of U_a V_b: one unimodular entry per column."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    n = a.shape[0]
    if b.shape != a.shape:
        raise ValueError("a and b must have the same length")
    dim = _check_cap(p, n, cap)
    X = _indices(p, n)
    zeta = np.exp(2j * np.pi / p)
    phases = zeta ** ((X @ b) % p)
    pows = p ** np.arange(n, dtype=np.int64)
    targets = ((X + a) % p) @ pows
    M = np.zeros((dim, dim), dtype=np.complex128)
    M[targets, np.arange(dim)] = phases
    return M


def weyl_phase(p: int, a, b) -> complex:
    """The group phase omega^{(p+1)/2 * a.b} attached to W(a, b)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    zeta = np.exp(2j * np.pi / p)
    w = (p + 1) // 2
    return zeta ** ((w * int(a @ b)) % p)


def projector_from_pairs(p: int, n: int, pairs,
                         cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Normalized sum of phased shift/phase operators over explicit pairs.

    Returns |pairs|^{-1} sum omega^{(p+1)/2 a.b} U_a V_b.  The result is an
    orthogonal projector exactly when the pairs form a totally isotropic
    subspace; nothing here assumes that, so corrupted inputs surface as
    residuals in the caller's checks.
    """
    dim = _check_cap(p, n, cap)
    X = _indices(p, n)
    pows = p ** np.arange(n, dtype=np.int64)
    zeta = np.exp(2j * np.pi / p)
    w = (p + 1) // 2
    P = np.zeros((dim, dim), dtype=np.complex128)
    cols = np.arange(dim)
    count = 0
    for a, b in pairs:
        a = np.asarray(a, dtype=np.int64) % p
        b = np.asarray(b, dtype=np.int64) % p
        phases = zeta ** (((X @ b) + w * int(a @ b)) % p)
        targets = ((X + a) % p) @ pows
        P[targets, cols] += phases
        count += 1
    P /= count
    return P


def projector(spec: CodeSpec, cap: int = DEFAULT_DIM_CAP,
              budget: int = 1 << 20) -> np.ndarray:
    """The projector onto the code space of a verified spec."""
    sample = enumerate_S(spec, budget=budget)
    return projector_from_pairs(spec.p, spec.n,
                                zip(sample.lefts, sample.rights), cap=cap)


def negacyclic_matrix(p: int, n: int, cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Permutation matrix |u> -> |(-u_{n-1}, u_0, ..., u_{n-2})>."""
    dim = _check_cap(p, n, cap)
    X = _indices(p, n)
    shifted = np.roll(X, 1, axis=1)
    shifted[:, 0] = (-shifted[:, 0]) % p
    pows = p ** np.arange(n, dtype=np.int64)
    targets = shifted @ pows
    M = np.zeros((dim, dim), dtype=np.complex128)
    M[targets, np.arange(dim)] = 1.0
    return M


def _max_norm(M) -> float:
    return float(np.abs(M).max()) if M.size else 0.0


@dataclass(frozen=True)
class SimulatorReport:
    """Residual norms and trace of the projector checks for one spec."""

    p: int
    n: int
    dim: int
    subspace_size: int
    idempotency: float       # ||P^2 - P||_max
    hermiticity: float       # ||P - P^dagger||_max
    trace: complex
    trace_target: int        # p^(deg g)
    shift_commutator: float  # ||N P - P N||_max

    @property
    def passed(self) -> bool:
        return (self.idempotency < TOL_AGGREGATE
                and self.hermiticity < TOL_AGGREGATE
                and abs(self.trace - self.trace_target) < TOL_TRACE
                and self.shift_commutator < TOL_AGGREGATE)

    def as_dict(self):
        return {
            "p": self.p, "n": self.n, "dim": self.dim,
            "subspace_size": self.subspace_size,
            "idempotency": self.idempotency,
            "hermiticity": self.hermiticity,
            "trace_real": self.trace.real, "trace_imag": self.trace.imag,
            "trace_target": self.trace_target,
            "shift_commutator": self.shift_commutator,
            "passed": self.passed,
        }


def projector_report(spec: CodeSpec, cap: int = DEFAULT_DIM_CAP) -> SimulatorReport:
    """Build the projector and measure every structural residual."""
    p, n = spec.p, spec.n
    dim = _check_cap(p, n, cap)
    P = projector(spec, cap=cap)
    N = negacyclic_matrix(p, n, cap=cap)
    size = p ** (n - (spec.g.degree or 0))
    return SimulatorReport(
        p=p, n=n, dim=dim, subspace_size=size,
        idempotency=_max_norm(P @ P - P),
        hermiticity=_max_norm(P - P.conj().T),
        trace=complex(np.trace(P)),
        trace_target=p ** (spec.g.degree or 0),
        shift_commutator=_max_norm(N @ P - P @ N),
    )


def check_negacyclic(spec: CodeSpec, cap: int = DEFAULT_DIM_CAP, rng=None,
                     samples: int = 8):
    """Shift-invariance checks: commutator norm plus conjugation spot checks.

    Conjugating U_a V_b by the shift matrix must give U_{Na} V_{Nb} up to a
    global phase; the commutator of the shift with the projector must vanish.
    Returns (pass flag, residual dict).
    """
    import random
    p, n = spec.p, spec.n
    _check_cap(p, n, cap)
    rng = rng or random.Random(0)
    N = negacyclic_matrix(p, n, cap=cap)
    P = projector(spec, cap=cap)
    residuals = {"shift_commutator": _max_norm(N @ P - P @ N)}
    worst = 0.0
    for _ in range(samples):
        a = [rng.randrange(p) for _ in range(n)]
        b = [rng.randrange(p) for _ in range(n)]
        W = weyl(p, a, b, cap=cap)
        conj = N @ W @ N.conj().T
        target = weyl(p, negacyclic_shift(a, p), negacyclic_shift(b, p),
                      cap=cap)
        # compare up to a global phase: divide out the largest entry ratio
        idx = np.unravel_index(np.abs(target).argmax(), target.shape)
        phase = conj[idx] / target[idx]
        if abs(abs(phase) - 1.0) > TOL_STRUCTURAL:
            worst = max(worst, abs(abs(phase) - 1.0))
        worst = max(worst, _max_norm(conj - phase * target))
    residuals["conjugation"] = worst
    ok = (residuals["shift_commutator"] < TOL_AGGREGATE
          and residuals["conjugation"] < TOL_AGGREGATE)
    return ok, residuals
