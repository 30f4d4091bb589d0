from fractions import Fraction
import cmath

import pytest
import sympy
from hypothesis import given, strategies as st

from waring import poly
from waring.field import (FieldError, conjugate, cyclotomic_field, cyclotomic_polynomial, embed, euler_phi,
                          format_rational, is_real, parse_element, encode_element, parse_rational, real_sign,
                          root_of_unity, simplify, CyclotomicNumber)

from conftest import cyclotomic_elements, small_rationals

ORDERS = [1, 2, 3, 4, 5, 6, 8, 10, 12]


def approx(a, b, tol=1e-12):
    return abs(complex(a) - complex(b)) < tol


def test_parse_rational_exact_only():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -7 ") == -7
    assert parse_rational("+2/6") == Fraction(1, 3)
    assert parse_rational(5) == 5
    for bad in ["0.5", "1e3", "1/0", "", "x", "1//2", 0.5, True]:
        with pytest.raises(FieldError):
            parse_rational(bad)
    assert format_rational(Fraction(-3, 6)) == "-1/2"


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = [Fraction(int(c)) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]
    assert cyclotomic_polynomial(n) == expected
    assert len(expected) - 1 == euler_phi(n)


def test_cyclotomic_polynomial_rejects_bad_order():
    with pytest.raises(FieldError):
        cyclotomic_polynomial(0)
    with pytest.raises(FieldError):
        cyclotomic_field(-3)


def test_roots_of_unity():
    for n in ORDERS:
        z = root_of_unity(n, 1)
        assert z ** n == 1
        assert root_of_unity(n, 0) == 1
        assert root_of_unity(n, n + 2) == z * z
        assert approx(z.to_complex(), cmath.exp(2j * cmath.pi / n))
    assert root_of_unity(4, 1) ** 2 == -1
    assert root_of_unity(6, 1) ** 3 == -1


def test_inverse_and_division_by_zero():
    K = cyclotomic_field(5)
    z = root_of_unity(K, 1)
    a = 1 + z + 3 * z ** 2
    assert a * a.inverse() == 1
    assert (a / a) == 1
    with pytest.raises(ZeroDivisionError):
        K.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        a / 0


@pytest.mark.parametrize("n", [5, 6, 8, 12])
@given(data=st.data())
def test_field_axioms(n, data):
    a, b, c = (data.draw(cyclotomic_elements(n)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a + 0 == a and a * 1 == a
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@pytest.mark.parametrize("n", [5, 8, 12])
@given(data=st.data())
def test_arithmetic_matches_complex_embedding(n, data):
    a, b = data.draw(cyclotomic_elements(n)), data.draw(cyclotomic_elements(n))
    assert approx((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-15)
    assert approx((a + b).to_complex(), a.to_complex() + b.to_complex(), 1e-15)
    assert approx(conjugate(a).to_complex(), a.to_complex().conjugate(), 1e-15)


@given(q=small_rationals)
def test_rational_embedding_and_hash(q):
    K = cyclotomic_field(8)
    a = K.from_rational(q)
    assert a == q and hash(a) == hash(q)
    assert a.is_rational() and simplify(a) == q
    assert embed(a, 24) == q


def test_conjugation_and_reality():
    z = root_of_unity(8, 1)
    assert conjugate(z) == z ** 7
    assert is_real(z + conjugate(z))
    assert not is_real(z)
    assert (z + z ** 7) ** 2 == 2
    assert is_real(Fraction(1, 3))


def test_embed_into_larger_field():
    z3 = root_of_unity(3, 1)
    w = embed(z3, 12)
    assert w == root_of_unity(12, 4)
    assert approx(w.to_complex(), z3.to_complex())
    with pytest.raises(FieldError):
        embed(z3, 8)


def test_real_sign():
    z = root_of_unity(12, 1)
    sqrt3 = z + conjugate(z)  # 2 cos(pi/6)
    assert sqrt3 ** 2 == 3
    assert real_sign(sqrt3) == 1
    assert real_sign(sqrt3 - 2) == -1
    assert real_sign(Fraction(0)) == 0
    assert real_sign(sqrt3 - sqrt3) == 0
    with pytest.raises(FieldError):
        real_sign(z)


def test_json_round_trip():
    z = root_of_unity(10, 3)
    a = 2 * z - Fraction(1, 7)
    assert CyclotomicNumber.from_json(a.to_json()) == a
    assert parse_element(encode_element(a), {"cyclotomic": 10}) == a
    assert parse_element("5/3") == Fraction(5, 3)


def test_cross_field_mixing_refused():
    with pytest.raises(FieldError):
        root_of_unity(5, 1) + root_of_unity(7, 1)


# univariate helpers

def test_poly_squarefree_decomposition_matches_sympy():
    x = sympy.Symbol("x")
    expr = (x - 1) ** 3 * (x + 2) ** 2 * (2 * x + 5)
    p = [Fraction(int(c)) for c in reversed(sympy.Poly(expr, x).all_coeffs())]
    mults = sorted(m for _, m in poly.squarefree_decomposition(p))
    assert mults == [1, 2, 3]
    assert poly.degree(poly.squarefree_part(p)) == 3


def test_poly_ext_gcd():
    p = [Fraction(c) for c in (-1, 0, 1)]   # x^2 - 1
    q = [Fraction(c) for c in (1, 1)]       # x + 1
    g, s, t = poly.ext_gcd(p, q)
    assert poly.monic(g) == [1, 1]
    assert poly.trim(poly.add(poly.mul(s, p), poly.mul(t, q))) == poly.trim(g)
