from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from waring.forms import BinaryForm, FormError, X, Y, apolar_apply, distinct_root_count, gl2_act
from waring.sylvester import (Branch, CertificateError, RankCertificate, SecantClass, apolar_generators,
                              classify_secant_point, initial_degree, matrix_rank_rows, rank, waring_rank)

from conftest import forms, invertible_matrices

x, y = X, Y


def power_sum(points, d, weights=None):
    weights = weights or [1] * len(points)
    out = BinaryForm.zero(d)
    for (u, v), w in zip(points, weights):
        out = out + (BinaryForm.linear(Fraction(u), Fraction(v)) ** d).scale(Fraction(w))
    return out


distinct_points = st.lists(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6)).filter(lambda p: p != (0, 0)),
    min_size=1, max_size=5,
).filter(lambda pts: all(
    p[0] * q[1] != p[1] * q[0] for i, p in enumerate(pts) for q in pts[i + 1:]))


@given(points=distinct_points, extra=st.integers(0, 3), data=st.data())
def test_rank_of_short_power_sums(points, extra, data):
    # oracle: r distinct d-th powers with 2r <= d + 1 have rank exactly r
    r = len(points)
    d = 2 * r - 1 + extra
    weights = data.draw(st.lists(st.integers(1, 9).map(lambda k: k * data.draw(st.sampled_from([1, -1]))),
                                 min_size=r, max_size=r))
    F = power_sum(points, d, weights)
    cert = waring_rank(F)
    assert cert.rank == r
    cert.verify(F)
    if r >= 2:
        assert distinct_root_count(F) >= 3 or (d == 2)


def in_ideal(h, *gens):
    """Whether h lies in the degree-(deg h) part of the ideal spanned by ``gens``."""
    span = [(g * BinaryForm.monomial(h.degree - g.degree, t)).coeffs
            for g in gens if g.degree <= h.degree for t in range(h.degree - g.degree + 1)]
    return matrix_rank_rows(span + [h.coeffs]) == matrix_rank_rows(span)


def test_examples():
    for d in range(1, 9):
        assert rank(x ** d) == 1
    for d in range(3, 11):
        assert rank(x ** (d - 1) * y) == d
    assert rank(x ** 2 + x * y + y ** 2) == 2
    assert rank((x + y) ** 2) == 1
    assert waring_rank((x + y) ** 2).branch is Branch.DEG_G1


def test_branches_and_certificates():
    c = waring_rank(x ** 2 * y)
    assert c.branch is Branch.DEG_G2 and c.rank == 3
    assert c.witness == Y ** 2 and not c.witness_square_free
    assert c.secondary_witness.degree == 3
    c = waring_rank(x ** 2 + x * y + y ** 2)
    assert c.branch is Branch.PENCIL and c.rank == 2
    c = waring_rank(x ** 5 - y ** 5)
    assert c.branch is Branch.DEG_G1 and c.rank == 2


@given(f=forms(max_degree=9))
def test_rank_bounds_and_replay(f):
    cert = waring_rank(f)
    assert 1 <= cert.rank <= f.degree
    cert.verify(f)
    assert RankCertificate.from_json(cert.to_json()) == cert


def test_tampered_certificates_are_caught():
    F = x ** 2 * y
    good = waring_rank(F)
    bad = [
        RankCertificate(2, good.witness, 2, False, Branch.DEG_G2, secondary_witness=good.secondary_witness),
        RankCertificate(3, X * Y, 2, True, Branch.DEG_G1),
        RankCertificate(3, good.witness, 2, False, Branch.DEG_G2),
        RankCertificate(3, good.witness, 2, True, Branch.DEG_G2, secondary_witness=good.secondary_witness),
    ]
    for cert in bad:
        with pytest.raises(CertificateError):
            cert.verify(F)
    # a degree-3 apolar form exists for x^3 + y^3 but X*Y of degree 2 is the lowest
    F = x ** 3 + y ** 3
    with pytest.raises(CertificateError):
        RankCertificate(3, X ** 3 - Y ** 3, 3, True, Branch.DEG_G1).verify(F)


@given(f=forms(max_degree=7), alpha=invertible_matrices())
def test_rank_is_gl2_invariant(f, alpha):
    assert rank(gl2_act(alpha, f)) == rank(f)


@pytest.mark.parametrize("d", range(2, 9))
@given(alpha=invertible_matrices())
def test_rank_two_orbit_splits(d, alpha):
    F = gl2_act(alpha, x ** d - y ** d)
    assert rank(F) == 2
    assert distinct_root_count(F) == d


def test_initial_degree_examples():
    assert initial_degree(x ** 6) == (1, [Y])
    r, s, alpha = 1, 5, 2   # s >= r + alpha
    F = BinaryForm.monomial(8, s + alpha, 3) + BinaryForm.monomial(8, s)
    assert initial_degree(F)[0] == r + alpha + 1
    # r=2, s=3, alpha=2: delta = 1, j = 0; the low branch gives s + j + 1
    F = BinaryForm.monomial(7, 5, 2) + BinaryForm.monomial(7, 3)
    assert initial_degree(F)[0] == 4


def test_generators():
    for r in range(1, 6):
        F = x ** r * y ** (r + 1) + x ** (r + 1) * y ** r
        g1, g2 = apolar_generators(F)
        assert g1.degree + g2.degree == 2 * r + 3
        # g2 is only defined modulo multiples of g1
        span = [(g1 * BinaryForm.monomial(g2.degree - g1.degree, t)).coeffs
                for t in range(g2.degree - g1.degree + 1)]
        assert matrix_rank_rows(span + [g2.coeffs, (X ** (r + 2)).coeffs]) == len(span) + 1
    for s in range(0, 4):
        for alpha in range(s + 1, 7):
            F = Fraction(3) * y ** (s + alpha) + x ** alpha * y ** s
            g1, g2 = apolar_generators(F)
            # generated by X*Y^(s+1) and X^alpha - c*Y^alpha; degrees add up to d + 2
            assert sorted((g1.degree, g2.degree)) == sorted((s + 2, alpha))
            assert in_ideal(X * Y ** (s + 1), g1, g2)
            assert all(g.degree > F.degree or apolar_apply(g, F).is_zero() for g in (g1, g2))
    g1, g2 = apolar_generators(x ** 7)
    assert (g1.degree, g2.degree) == (1, 8)


@pytest.mark.parametrize("d", range(3, 9))
def test_classification(d):
    assert classify_secant_point(x ** d) is SecantClass.ON_CURVE
    assert classify_secant_point(x ** (d - 1) * y) is SecantClass.TANGENT
    assert classify_secant_point(x ** d - y ** d) is SecantClass.SECANT
    if d >= 4:
        assert classify_secant_point(x ** (d - 2) * y ** 2) is SecantClass.OUTSIDE
    else:
        assert classify_secant_point(x * y ** 2) is SecantClass.TANGENT


def test_rejects_bad_input():
    with pytest.raises(FormError):
        waring_rank(BinaryForm.zero(3))
    with pytest.raises(FormError):
        waring_rank(BinaryForm((Fraction(2),)))
    with pytest.raises(FormError):
        classify_secant_point(x * y)
