import random

import numpy as np
import pytest

from negastab.fields import ExtField
from negastab.polyring import Poly, parse_poly
from negastab.construct import construct_code
from negastab.oracle import symplectic
from negastab.weyl import (DimensionCapExceeded, check_negacyclic,
                           negacyclic_matrix, projector, projector_from_pairs,
                           projector_report, weyl)

F3 = ExtField(3)


def spec_3_4():
    # the only admissible construction at (3, 4): everything in g
    return construct_code(3, 4, 3, 1, Poly.x_pow_n_plus_one(F3, 4),
                          Poly.one(ExtField(3, 3)))


def spec_5_2():
    return construct_code(5, 2, 2, 1, parse_poly("X^2+1", ExtField(5)),
                          Poly.one(ExtField(5, 2)))


def test_weyl_identity_and_unitarity():
    assert np.allclose(weyl(3, [0, 0], [0, 0]), np.eye(9))
    rng = random.Random(0)
    for _ in range(20):
        a = [rng.randrange(3) for _ in range(2)]
        b = [rng.randrange(3) for _ in range(2)]
        W = weyl(3, a, b)
        assert np.allclose(W @ W.conj().T, np.eye(9), atol=1e-12)
        # exactly one unimodular entry per column
        mags = np.abs(W)
        assert np.allclose(mags.max(axis=0), 1.0, atol=1e-12)
        assert (np.count_nonzero(mags > 1e-15, axis=0) == 1).all()


def test_commutation_iff_symplectic_zero():
    rng = random.Random(1)
    for _ in range(40):
        a, b, c, d = ([rng.randrange(3) for _ in range(2)] for _ in range(4))
        W1, W2 = weyl(3, a, b), weyl(3, c, d)
        commute = np.allclose(W1 @ W2, W2 @ W1, atol=1e-12)
        assert commute == (symplectic((a, b), (c, d), 3) == 0)


def test_projector_on_isotropic_pairs():
    # span{(1,1)} in GF(3)^1 x GF(3)^1 and span{(u,u)} at n = 2 are isotropic
    cases = [
        (3, 1, [([0], [0]), ([1], [1]), ([2], [2])]),
        (3, 2, [([i, j], [i, j]) for i in range(3) for j in range(3)]),
    ]
    for p, n, pairs in cases:
        P = projector_from_pairs(p, n, pairs)
        assert np.abs(P @ P - P).max() < 1e-12
        assert np.abs(P - P.conj().T).max() < 1e-12
        assert abs(np.trace(P) - p ** n / len(pairs)) < 1e-9


def test_projector_rejects_nothing_but_caps():
    spec = spec_3_4()
    with pytest.raises(DimensionCapExceeded):
        projector(spec, cap=10)


def test_degenerate_projectors_are_identities():
    for spec in (spec_3_4(), spec_5_2()):
        P = projector(spec)
        dim = spec.p ** spec.n
        assert np.allclose(P, np.eye(dim), atol=1e-12)
        rep = projector_report(spec)
        assert rep.passed
        assert rep.trace_target == spec.p ** spec.g.degree == dim


def test_negacyclic_matrix():
    N = negacyclic_matrix(3, 2)
    # |(1,0)> -> |(0,1)>: index 1 -> index 3 in little-endian base 3
    assert N[3, 1] == 1
    acc = np.eye(9)
    for _ in range(4):  # N^(2n) = identity
        acc = N @ acc
    assert np.allclose(acc, np.eye(9), atol=1e-12)
    assert np.allclose(N @ N.conj().T, np.eye(9), atol=1e-12)


def test_check_negacyclic_degenerate():
    ok, residuals = check_negacyclic(spec_3_4())
    assert ok, residuals
    assert residuals["shift_commutator"] == 0.0


def test_shift_detects_non_closed_subspace():
    # span{((1,0), (0,0))} is isotropic but not closed under the shift
    pairs = [([0, 0], [0, 0]), ([1, 0], [0, 0]), ([2, 0], [0, 0])]
    P = projector_from_pairs(3, 2, pairs)
    N = negacyclic_matrix(3, 2)
    assert np.abs(P @ P - P).max() < 1e-12  # still a projector
    assert np.abs(N @ P - P @ N).max() > 1e-3  # but not shift-invariant


def test_phased_summands_commute_on_isotropic_set():
    from negastab.weyl import weyl_phase
    pairs = [([i, j], [i, j]) for i in range(3) for j in range(3)]
    mats = [weyl_phase(3, a, b) * weyl(3, a, b) for a, b in pairs]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            assert np.allclose(mats[i] @ mats[j], mats[j] @ mats[i],
                               atol=1e-12)


def test_non_isotropic_pairs_fail_idempotency():
    # the full space at n = 1 is not isotropic; the sum is not a projector
    pairs = [([i], [j]) for i in range(3) for j in range(3)]
    P = projector_from_pairs(3, 1, pairs)
    assert np.abs(P @ P - P).max() > 1e-3
