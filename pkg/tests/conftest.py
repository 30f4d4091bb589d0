from fractions import Fraction

from hypothesis import settings, strategies as st

from waring.field import cyclotomic_field
from waring.forms import BinaryForm

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=12),
)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


@st.composite
def forms(draw, min_degree=1, max_degree=8):
    d = draw(st.integers(min_value=min_degree, max_value=max_degree))
    coeffs = draw(st.lists(small_rationals, min_size=d + 1, max_size=d + 1))
    F = BinaryForm(tuple(coeffs))
    if F.is_zero():
        F = BinaryForm.monomial(d, 0)
    return F


@st.composite
def cyclotomic_elements(draw, order):
    K = cyclotomic_field(order)
    return K.reduce(draw(st.lists(small_rationals, min_size=K.degree, max_size=K.degree)))


@st.composite
def invertible_matrices(draw):
    from waring.forms import Matrix2

    a, b, c, d = (draw(st.integers(min_value=-5, max_value=5)) for _ in range(4))
    if a * d - b * c == 0:
        a, b, c, d = a + 1, b, c, d + 1
        if a * d - b * c == 0:
            a, b, c, d = 1, b, 0, 1
    return Matrix2(Fraction(a), Fraction(b), Fraction(c), Fraction(d))
