"""Closed-form Waring rank of binomials ``a*x^r*y^(s+alpha) + b*x^(r+alpha)*y^s``.

The rank does not depend on the nonzero coefficients a, b. Each case of the
rank table comes with an explicit lowest-degree apolar form g1 for the
normalized binomial, which :func:`binomial_witness` builds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from .forms import BinaryForm


class BinomialError(ValueError):
    pass


@dataclass(frozen=True)
class BinomialSpec:
    r: int
    s: int
    alpha: int

    def __post_init__(self):
        if min(self.r, self.s) < 0 or self.r > self.s:
            raise BinomialError(f"need 0 <= r <= s, got r={self.r}, s={self.s}")
        if self.alpha < 1:
            raise BinomialError(f"need alpha >= 1, got {self.alpha}")

    @property
    def degree(self) -> int:
        return self.r + self.s + self.alpha

    @property
    def delta(self) -> int:
        return self.r + self.alpha - self.s

    @property
    def q(self) -> int:
        return self.r // self.alpha

    @property
    def j(self) -> int:
        return self.r % self.alpha

    def normalized_a(self) -> Fraction:
        r, s, al = self.r, self.s, self.alpha
        return Fraction(factorial(r + al) * factorial(s), factorial(r) * factorial(s + al))

    def form(self, a=None, b=1) -> BinaryForm:
        """``a*x^r*y^(s+alpha) + b*x^(r+alpha)*y^s``; a defaults to the normalizing constant."""
        a = self.normalized_a() if a is None else Fraction(a)
        b = Fraction(b)
        if a == 0 or b == 0:
            raise BinomialError("binomial coefficients must be nonzero")
        d = self.degree
        coeffs = [Fraction(0)] * (d + 1)
        coeffs[self.s + self.alpha] = a
        coeffs[self.s] = b
        return BinaryForm(tuple(coeffs))


def spec_from_exponents(a1: int, b1: int, a2: int, b2: int) -> Tuple[BinomialSpec, bool]:
    """Canonical spec for the monomials x^a1 y^b1 and x^a2 y^b2.

    Returns ``(spec, swapped)``; ``swapped`` means x and y were exchanged to get r <= s.
    """
    if min(a1, b1, a2, b2) < 0:
        raise BinomialError("exponents must be nonnegative")
    if a1 + b1 != a2 + b2:
        raise BinomialError(f"monomials have different degrees {a1 + b1} and {a2 + b2}")
    if (a1, b1) == (a2, b2):
        raise BinomialError("the two monomials coincide; not a binomial")
    if a1 > a2:
        a1, b1, a2, b2 = a2, b2, a1, b1
    if a1 <= b2:
        return BinomialSpec(a1, b2, a2 - a1), False
    return BinomialSpec(b2, a1, b1 - b2), True


def binomial_rank(spec: BinomialSpec) -> int:
    r, s, al = spec.r, spec.s, spec.alpha
    delta, j = spec.delta, spec.j
    if delta <= 0:
        return s + 1
    if j == 0 and r == s and al > 1:
        return s + 2
    if j == delta:
        return s + 1
    if j > delta:
        return r + al + 1
    return r + al - j


def monomial_rank(a: int, b: int) -> int:
    """Waring rank of x^a y^b."""
    if a < 0 or b < 0 or a + b < 1:
        raise BinomialError(f"monomial rank needs a, b >= 0 and a + b >= 1, got ({a}, {b})")
    if min(a, b) == 0:
        return 1
    return max(a, b) + 1


def witness_case(spec: BinomialSpec) -> str:
    """Which construction produces g1: C1, Ci, Cii, Ciii or Civ."""
    delta, j = spec.delta, spec.j
    if delta <= 0:
        return "C1"
    if j >= delta - 1:
        return "Civ"
    if 2 * (j + 1) <= delta:
        return "Ci"
    if delta % 2 == 1 and 2 * j == delta - 1:
        return "Cii"
    return "Ciii"


def _dual(terms: Dict[Tuple[int, int], int]) -> BinaryForm:
    """Dual form from ``{(x_exp, y_exp): coeff}``."""
    degs = {px + py for px, py in terms}
    assert len(degs) == 1, degs
    e = degs.pop()
    coeffs = [Fraction(0)] * (e + 1)
    for (px, py), c in terms.items():
        if px < 0 or py < 0:
            raise AssertionError(f"negative exponent in witness term X^{px} Y^{py}")
        coeffs[py] += c
    return BinaryForm(tuple(coeffs))


def binomial_witness(spec: BinomialSpec) -> Tuple[BinaryForm, str]:
    """Lowest-degree apolar form g1 of ``spec.form()`` and the case that produced it."""
    r, s, al = spec.r, spec.s, spec.alpha
    q, j, delta = spec.q, spec.j, spec.delta
    case = witness_case(spec)
    if case == "C1":
        return _dual({(r + al + 1, 0): 1}), case
    if case == "Ci":
        terms = {(r + 1 - i * al, i * al + s - r + j + 1): (-1) ** i for i in range(q + 1)}
    elif case == "Cii":
        terms = {(s + j + 1 - i * al, i * al): (-1) ** i for i in range(q + 2)}
    elif case == "Ciii":
        k = delta - j
        terms = {(s + k - i * al, i * al): (-1) ** i for i in range(q + 2)}
    else:
        terms = {(s - (j - delta) - i * al, i * al + (j - delta) + 1): (-1) ** i for i in range(q + 2)}
    return _dual(terms), case


def witness_expected_square_free(spec: BinomialSpec) -> bool:
    case = witness_case(spec)
    if case == "C1":
        return False
    if case == "Ci":
        return spec.j == 0 and spec.r == spec.s
    if case == "Civ":
        return spec.j <= spec.delta
    return True


def all_specs(d_max: int, d_min: int = 1) -> List[BinomialSpec]:
    out = []
    for d in range(d_min, d_max + 1):
        for alpha in range(1, d + 1):
            for r in range(0, d - alpha + 1):
                s = d - alpha - r
                if r <= s:
                    out.append(BinomialSpec(r, s, alpha))
    return out


def random_coefficient(rng: random.Random) -> Fraction:
    sign = rng.choice((-1, 1))
    return Fraction(sign * rng.randint(1, 100), rng.randint(1, 100))


def oracle_sweep(d_max: int, seed: int = 0, pairs: int = 3, rank_fn=None) -> dict:
    """Compare the table against Sylvester's algorithm on random coefficient pairs."""
    from .sylvester import waring_rank

    if d_max < 2:
        raise BinomialError(f"sweep needs d_max >= 2, got {d_max}")
    rank_fn = rank_fn or (lambda F: waring_rank(F).rank)
    rng = random.Random(seed)
    mismatches = []
    checked = 0
    for spec in all_specs(d_max):
        expected = binomial_rank(spec)
        for _ in range(pairs):
            a, b = random_coefficient(rng), random_coefficient(rng)
            got = rank_fn(spec.form(a, b))
            checked += 1
            if got != expected:
                mismatches.append({"r": spec.r, "s": spec.s, "alpha": spec.alpha,
                                   "a": f"{a.numerator}/{a.denominator}", "b": f"{b.numerator}/{b.denominator}",
                                   "table": expected, "sylvester": got})
    return {"d_max": d_max, "seed": seed, "pairs_per_spec": pairs,
            "spec_count": len(all_specs(d_max)), "forms_checked": checked, "mismatches": mismatches}
