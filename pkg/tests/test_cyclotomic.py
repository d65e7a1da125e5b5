import pytest

from negastab.fields import ExtField
from negastab.polyring import Poly, eval_at, format_poly, negate_x, parse_poly
from negastab.cyclotomic import (Coset, admissible_exponents,
                                 admissible_lengths, factor_xn_plus_one,
                                 get_frame, minimal_t_for_degree,
                                 negate_coset, odd_cosets, sigma_orbit)

F3 = ExtField(3)
F9 = ExtField(3, 2)


def test_admissible_lengths_goldens():
    assert admissible_lengths(3, 10) == 2
    assert admissible_lengths(3, 28) == 3   # 3^3 + 1 = 28, quotient 1
    assert admissible_lengths(3, 7) is None  # scan oracle below confirms
    for t in range(1, 50):
        assert not ((3 ** t + 1) % 7 == 0 and ((3 ** t + 1) // 7) % 2 == 1)
    with pytest.raises(ValueError):
        admissible_lengths(3, 3)
    # n = 2 over p = 1 mod 4: every exponent is admissible
    assert admissible_exponents(5, 2) == (1, 1)
    assert minimal_t_for_degree(5, 2, 2) == 2
    assert minimal_t_for_degree(3, 4, 3) == 3
    assert minimal_t_for_degree(3, 4, 2) is None


def test_admissible_scan_against_bruteforce():
    for p in (3, 5, 7):
        for n in range(2, 40, 2):
            if n % p == 0:
                continue
            got = admissible_lengths(p, n)
            brute = next((t for t in range(1, 200)
                          if (p ** t + 1) % n == 0
                          and ((p ** t + 1) // n) % 2 == 1), None)
            assert got == brute, (p, n)


def test_odd_cosets_goldens():
    assert [c.members for c in odd_cosets(3, 8)] == [(1, 3), (5, 7)]
    assert [c.members for c in odd_cosets(3, 4)] == [(1, 3)]
    cosets = odd_cosets(9, 20)
    assert [c.members for c in cosets] == [
        (1, 9), (3, 7), (5,), (11, 19), (13, 17), (15,)]
    # partition property
    assert sorted(e for c in cosets for e in c) == list(range(1, 20, 2))
    with pytest.raises(ValueError):
        odd_cosets(3, 9)
    with pytest.raises(ValueError):
        odd_cosets(3, 6)


def test_negate_coset():
    assert negate_coset(Coset((1, 9), 20), 20).members == (11, 19)
    assert negate_coset(Coset((1, 3), 8), 8).members == (5, 7)
    # fixed cosets correspond exactly to factors even in X
    for p, n in ((3, 10), (3, 4), (5, 26)):
        fs = factor_xn_plus_one(p, 1, n)
        for f, c in fs.factors:
            fixed = negate_coset(c, 2 * n).members == c.members
            assert fixed == (negate_x(f) == f), (p, n, c)


def test_factorization_goldens():
    fs = factor_xn_plus_one(3, 1, 10)
    assert {format_poly(f) for f in fs.polys()} == {
        "X^2+1", "X^4+X^3+2*X+1", "X^4+2*X^3+X+1"}
    fs9 = factor_xn_plus_one(3, 2, 10)
    assert {format_poly(f) for f in fs9.polys()} == {
        "X^2+(e+2)*X+2", "X^2+(2e+2)*X+2", "X^2+(e+1)*X+2",
        "X^2+(2e+1)*X+2", "X+(e)", "X+(2e)"}
    fs4 = factor_xn_plus_one(3, 1, 4)
    assert {format_poly(f) for f in fs4.polys()} == {"X^2+X+2", "X^2+2*X+2"}


def test_factor_product_and_coset_sizes():
    for p, k, n in ((3, 1, 10), (3, 2, 10), (5, 2, 26), (7, 2, 10),
                    (3, 3, 28), (5, 1, 14)):
        fs = factor_xn_plus_one(p, k, n)
        prod = Poly.one(fs.field)
        for f, c in fs.factors:
            assert f.degree == c.size
            assert f.is_monic()
            prod = prod * f
        assert prod == Poly.x_pow_n_plus_one(fs.field, n)


def test_even_degree_property():
    # base-field factors other than linear ones have even degree at every
    # admissible length
    for p in (3, 5, 7):
        for n in range(2, 60, 2):
            if n % p == 0 or admissible_lengths(p, n) is None:
                continue
            fs = factor_xn_plus_one(p, 1, n)
            for f, _ in fs.factors:
                assert f.degree == 1 or f.degree % 2 == 0, (p, n, f)
            # linear factors exist exactly when p = 1 mod 4, as X -+ alpha
            linears = [f for f, _ in fs.factors if f.degree == 1]
            if p % 4 == 1:
                assert len(linears) == 2
                for f in linears:
                    alpha = -f.coeff(0)
                    assert alpha * alpha == ExtField(p)(p - 1)
            else:
                assert not linears


def test_roots_land_on_cosets():
    for p, k, n in ((3, 1, 10), (3, 2, 10), (5, 2, 26)):
        fs = factor_xn_plus_one(p, k, n)
        frame = fs.frame
        for f, c in fs.factors:
            for e in c:
                assert eval_at(f, frame.beta_power(e)) == frame.field.zero


def test_sigma_orbit_golden():
    fs9 = factor_xn_plus_one(3, 2, 10)
    f0 = parse_poly("X^2+(e+2)*X+2", F9)
    orbit = sigma_orbit(fs9, f0)
    assert [format_poly(f) for f in orbit] == [
        "X^2+(e+2)*X+2", "X^2+(2e+2)*X+2"]
    with pytest.raises(ValueError):
        sigma_orbit(fs9, parse_poly("X^2+1", F9))
    # base-field factor sets have singleton orbits
    fs = factor_xn_plus_one(3, 1, 10)
    for f in fs.polys():
        assert sigma_orbit(fs, f) == [f]
    # orbit length divides k
    fs27 = factor_xn_plus_one(3, 3, 28)
    for f in fs27.polys():
        assert 3 % len(sigma_orbit(fs27, f)) == 0


def test_beta_determinism_and_order():
    frame = get_frame(3, 10)
    frame2 = get_frame(3, 10)
    assert frame is frame2
    from negastab.fields import FieldElem, element_order
    beta = FieldElem(frame.field, frame.beta)
    assert element_order(beta) == 20
    assert beta ** 10 == frame.field(frame.field.p - 1)  # beta^n = -1


def test_worked_example_root_exponents():
    # a root of X^2+(e+2)X+2 is a primitive 20th root; relative to one of
    # the two roots, the quartic even factor has the exponent pair {9, 11}
    fs9 = factor_xn_plus_one(3, 2, 10)
    f = parse_poly("X^2+(e+2)*X+2", F9)
    h = parse_poly("X^4+(2e+1)*X^2+1", F9)
    frame = fs9.frame
    coset = fs9.coset_of(f)
    hits = []
    for e in coset:
        beta = frame.beta_power(e)  # roots of f inside the frame
        from negastab.fields import element_order
        assert element_order(beta) == 20
        powers = {j for j in range(1, 20, 2)
                  if eval_at(h, beta ** j) == frame.field.zero}
        hits.append(powers)
    assert any({9, 11} <= powers for powers in hits)
