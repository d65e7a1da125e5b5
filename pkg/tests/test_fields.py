import random

import pytest

from negastab.fields import (ExtField, element_order, embed, field_arith,
                             find_irreducible, frobenius,
                             multiplicative_generator, pull_back,
                             validate_odd_prime)

F3 = ExtField(3)
F9 = ExtField(3, 2)


def test_validate_odd_prime():
    for p in (3, 5, 7, 65521):
        assert validate_odd_prime(p) == p
    for bad in (1, 2, 4, 9, 2**16 + 1, -3):
        with pytest.raises((ValueError, TypeError)):
            validate_odd_prime(bad)


def test_defining_polynomials():
    # brute-force oracle: first irreducible in the documented scan order
    def brute(p, k):
        import itertools
        for t in itertools.product(range(p), repeat=k):
            c = t[::-1]
            coeffs = list(c) + [1]
            if any(sum(coef * pow(x, i, p) for i, coef in enumerate(coeffs))
                   % p == 0 for x in range(p)):
                continue
            if k <= 3:  # no roots suffices up to cubics
                return c
            # quartics: also exclude products of two irreducible quadratics
            quads = []
            for c0 in range(p):
                for c1 in range(p):
                    if all((x * x + c1 * x + c0) % p for x in range(p)):
                        quads.append((c0, c1))
            reducible = False
            for q1 in quads:
                for q2 in quads:
                    prod = [q1[0] * q2[0], q1[0] * q2[1] + q1[1] * q2[0],
                            q1[0] + q2[0] + q1[1] * q2[1], q1[1] + q2[1]]
                    if tuple(x % p for x in prod) == c:
                        reducible = True
            if not reducible:
                return c
        raise AssertionError

    assert find_irreducible(3, 2) == (1, 0) == brute(3, 2)   # Y^2+1
    assert find_irreducible(5, 2) == (2, 0) == brute(5, 2)   # Y^2+2
    assert find_irreducible(7, 2) == (1, 0) == brute(7, 2)
    assert find_irreducible(3, 1) == (0,)                    # Y
    assert find_irreducible(3, 3) == brute(3, 3)
    assert find_irreducible(3, 4) == brute(3, 4)


def test_arithmetic_golden_values():
    eta = F9.eta
    assert eta * eta == F9(2)          # e^2 = -1 over GF(3)
    assert F3(1) / F3(2) == F3(2)      # 2*2 = 4 = 1 (mod 3)
    assert F9((2, 1)) + F9((1, 2)) == F9.zero   # (e+2) + (2e+1) = 0
    assert field_arith(eta, eta, "mul") == F9(2)
    with pytest.raises(ValueError):
        field_arith(eta, eta, "pow")


def test_division_errors():
    with pytest.raises(ZeroDivisionError):
        F3(1) / F3(0)
    F25 = ExtField(5, 2)
    with pytest.raises(ValueError):
        F9.eta * F25.eta  # mismatched parents


def test_inverses_random():
    rng = random.Random(0)
    for field in (F3, F9, ExtField(5, 3), ExtField(7, 2)):
        for _ in range(50):
            x = field(tuple(rng.randrange(field.p) for _ in range(field.k)))
            if not x:
                continue
            assert x * (field.one / x) == field.one


def test_frobenius():
    eta = F9.eta
    assert frobenius(eta) == F9((0, 2))        # e^3 = -e
    assert frobenius(F9(2)) == F9(2)           # base field fixed
    F27 = ExtField(3, 3)
    rng = random.Random(1)
    for _ in range(30):
        x = F27(tuple(rng.randrange(3) for _ in range(3)))
        assert frobenius(frobenius(frobenius(x))) == x
        y = F27(tuple(rng.randrange(3) for _ in range(3)))
        assert frobenius(x + y) == frobenius(x) + frobenius(y)
        assert frobenius(x * y) == frobenius(x) * frobenius(y)
        # fixed points are exactly the prime subfield
        assert (frobenius(x) == x) == (not any(x.coeffs[1:]))
    assert frobenius(eta, 2) == eta            # order k


def test_element_order():
    assert element_order(F3(2)) == 2
    assert element_order(F9.eta) == 4
    # successive-powers oracle on GF(9)
    x = F9((1, 1))
    order = 1
    acc = x
    while acc != F9.one:
        acc = acc * x
        order += 1
    assert order == 8 == element_order(x)
    with pytest.raises(ZeroDivisionError):
        element_order(F9.zero)


def test_multiplicative_generator():
    for field in (F3, F9, ExtField(5, 2), ExtField(7, 3)):
        g = multiplicative_generator(field)
        assert element_order(g) == field.order - 1


def test_embed_golden():
    F81 = ExtField(3, 4)
    z = embed(F9.eta, F81)
    assert z * z + F81.one == F81.zero   # image satisfies Y^2 + 1 = 0
    # exhaustive root scan oracle: image is among the roots
    roots = [x for x in F81.elements() if x * x + F81.one == F81.zero]
    assert z in roots and len(roots) == 2
    assert embed(F9.one, F81) == F81.one
    assert embed(F9.eta, F9) == F9.eta   # identity embedding
    assert pull_back(z, F9) == F9.eta


def test_embed_is_homomorphism():
    F81 = ExtField(3, 4)
    rng = random.Random(2)
    for _ in range(40):
        x = F9(tuple(rng.randrange(3) for _ in range(2)))
        y = F9(tuple(rng.randrange(3) for _ in range(2)))
        assert embed(x + y, F81) == embed(x, F81) + embed(y, F81)
        assert embed(x * y, F81) == embed(x, F81) * embed(y, F81)


def test_embed_degree_error():
    F27 = ExtField(3, 3)
    with pytest.raises(ValueError):
        embed(F9.eta, F27)  # 2 does not divide 3


def test_field_interning_and_determinism():
    assert ExtField(3, 2) is F9
    assert find_irreducible(3, 2) == find_irreducible(3, 2)
    g1 = multiplicative_generator(ExtField(5, 2))
    g2 = multiplicative_generator(ExtField(5, 2))
    assert g1 == g2
