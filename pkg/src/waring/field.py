"""Exact arithmetic over Q and over the cyclotomic fields Q(zeta_n).

Rationals are plain :class:`fractions.Fraction` values. An element of
Q(zeta_n) is stored as its residue modulo the n-th cyclotomic polynomial, a
coefficient vector of length phi(n) where entry ``i`` multiplies ``zeta_n**i``.
Working modulo Phi_n (rather than z**n - 1) keeps the quotient a field, so every
nonzero element is invertible.
"""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import mpmath

from . import poly

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class FieldError(ValueError):
    """Invalid field operation (division by zero, mixed fields, bad encoding)."""


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimal and float inputs are rejected."""
    if isinstance(text, bool):
        raise FieldError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise FieldError(f"rationals must be given as 'p/q' strings, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise FieldError(f"not an exact rational 'p/q' string: {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise FieldError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@functools.lru_cache(maxsize=None)
def _cyclotomic(n: int) -> Tuple[Fraction, ...]:
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for e in range(1, n):
        if n % e == 0:
            q, r = poly.divmod_poly(num, list(_cyclotomic(e)))
            assert not r
            num = q
    return tuple(Fraction(c) for c in num)


def cyclotomic_polynomial(n: int) -> List[Fraction]:
    """Coefficients (ascending) of the monic n-th cyclotomic polynomial."""
    if not isinstance(n, int) or n < 1:
        raise FieldError(f"cyclotomic order must be a positive integer, got {n!r}")
    return list(_cyclotomic(n))


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class CyclotomicField:
    """The field Q(zeta_n). Instances are cached per order; use :func:`cyclotomic_field`."""

    def __init__(self, order: int):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        # powers z**k mod Phi_n for 0 <= k < 2*degree, enough to reduce any product
        self._powers: List[Tuple[Fraction, ...]] = []
        cur = [Fraction(1)] + [Fraction(0)] * (self.degree - 1)
        for _ in range(max(2 * self.degree, order)):
            self._powers.append(tuple(cur))
            cur = self._times_z(cur)

    def _times_z(self, v: Sequence[Fraction]) -> List[Fraction]:
        top = v[-1]
        out = [Fraction(0)] + list(v[:-1])
        if top:
            for i in range(self.degree):
                out[i] -= top * self.modulus[i]
        return out

    def __repr__(self) -> str:
        return f"CyclotomicField({self.order})"

    def __reduce__(self):
        return (cyclotomic_field, (self.order,))

    def reduce(self, coeffs: Sequence) -> "CyclotomicNumber":
        """Residue of an arbitrary-length coefficient list modulo Phi_n."""
        out = [Fraction(0)] * self.degree
        for k, c in enumerate(coeffs):
            if not c:
                continue
            if k < len(self._powers):
                vec = self._powers[k]
            else:
                vec = self._powers[k % self.order]  # z**n == 1
            for i, v in enumerate(vec):
                if v:
                    out[i] += c * v
        return CyclotomicNumber(self, out)

    def zero(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self, [Fraction(0)] * self.degree)

    def one(self) -> "CyclotomicNumber":
        return self.from_rational(1)

    def from_rational(self, q) -> "CyclotomicNumber":
        return CyclotomicNumber(self, [Fraction(q)] + [Fraction(0)] * (self.degree - 1))

    def root_of_unity(self, k: int) -> "CyclotomicNumber":
        return CyclotomicNumber(self, self._powers[k % self.order])


@functools.lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    if not isinstance(order, int) or order < 1:
        raise FieldError(f"cyclotomic order must be a positive integer, got {order!r}")
    return CyclotomicField(order)


def root_of_unity(field: Union[CyclotomicField, int], k: int) -> "CyclotomicNumber":
    """``zeta_n**k`` with ``k`` reduced mod n; ``k = 0`` gives 1."""
    if isinstance(field, int):
        field = cyclotomic_field(field)
    return field.root_of_unity(k)


class CyclotomicNumber:
    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CyclotomicField, coeffs: Iterable):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != field.degree:
            raise FieldError(f"expected {field.degree} coefficients for {field!r}, got {len(coeffs)}")
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # coercion

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.from_rational(other)
        return NotImplemented

    def _pair(self, other):
        if isinstance(other, CyclotomicNumber) and other.field is not self.field:
            if self.is_rational():
                return other.field.from_rational(self.coeffs[0]), other
            if other.is_rational():
                return self, self.field.from_rational(other.coeffs[0])
            raise FieldError(f"mixed fields {self.field!r} and {other.field!r}")
        o = self._coerce(other)
        if o is NotImplemented:
            return None
        return self, o

    # ring operations

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.field, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, [-x for x in self.coeffs])

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.field, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CyclotomicNumber(self.field, [x * other for x in self.coeffs])
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if b.is_rational():
            return CyclotomicNumber(a.field, [x * b.coeffs[0] for x in a.coeffs])
        if a.is_rational():
            return CyclotomicNumber(a.field, [a.coeffs[0] * y for y in b.coeffs])
        n = a.field.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        return a.field.reduce(prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        g, u, _ = poly.ext_gcd(list(self.coeffs), self.field.modulus)
        if poly.degree(g) != 0:
            raise FieldError("element is not invertible modulo the cyclotomic polynomial")
        return self.field.reduce(u)

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            if other.field is self.field:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.field.order, self.coeffs))
        return self._hash

    def conjugate(self) -> "CyclotomicNumber":
        n = self.field.order
        terms = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                terms[(-i) % n] += c
        return self.field.reduce(terms)

    def is_real(self) -> bool:
        return self.conjugate() == self

    # numerics, only ever used to read off signs of exactly-known nonzero reals

    def to_complex(self, prec: int = 100) -> mpmath.mpc:
        """Numerical value at ``zeta_n = exp(2*pi*i/n)`` with ``prec`` working bits."""
        with mpmath.workprec(prec):
            z = mpmath.expjpi(mpmath.mpf(2) / self.field.order)
            acc = mpmath.mpc(0)
            for i, c in enumerate(self.coeffs):
                if c:
                    acc += mpmath.mpf(c.numerator) / c.denominator * z ** i
            return +acc

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.field.order}, {[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (f"z{self.field.order}" if i == 1 else f"z{self.field.order}^{i}")
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # encoding

    def to_json(self) -> dict:
        return {"order": self.field.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CyclotomicNumber":
        try:
            field = cyclotomic_field(int(obj["order"]))
            coeffs = [parse_rational(c) for c in obj["coeffs"]]
        except (KeyError, TypeError) as exc:
            raise FieldError(f"malformed cyclotomic number {obj!r}") from exc
        if len(coeffs) != field.degree:
            raise FieldError(f"expected {field.degree} coefficients for order {field.order}")
        return cls(field, coeffs)


FieldElement = Union[Fraction, CyclotomicNumber]


def conjugate(a: FieldElement) -> FieldElement:
    if isinstance(a, CyclotomicNumber):
        return a.conjugate()
    return Fraction(a)


def is_real(a: FieldElement) -> bool:
    if isinstance(a, CyclotomicNumber):
        return a.is_real()
    return True


def is_zero(a: FieldElement) -> bool:
    return a == 0


def embed(a: FieldElement, order: int) -> CyclotomicNumber:
    """Image of ``a`` under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m**(m/n); needs n | m."""
    target = cyclotomic_field(order)
    if not isinstance(a, CyclotomicNumber):
        return target.from_rational(a)
    n = a.field.order
    if order % n:
        raise FieldError(f"cannot embed Q(zeta_{n}) into Q(zeta_{order})")
    step = order // n
    terms = [Fraction(0)] * order
    for i, c in enumerate(a.coeffs):
        if c:
            terms[(i * step) % order] += c
    return target.reduce(terms)


def simplify(a: FieldElement) -> FieldElement:
    """Rational elements of a cyclotomic field come back as Fractions."""
    if isinstance(a, CyclotomicNumber) and a.is_rational():
        return a.coeffs[0]
    return a


def real_sign(a: FieldElement) -> int:
    """Sign of a real field element.

    Rationals are exact. For a real cyclotomic number the value is known to be
    exactly nonzero (or exactly zero), so numerical evaluation with a rigorous
    error bound and increasing precision always terminates with the right sign.
    """
    if not isinstance(a, CyclotomicNumber):
        a = Fraction(a)
        return (a > 0) - (a < 0)
    if not a.is_real():
        raise FieldError(f"{a} is not real")
    if a.is_zero():
        return 0
    if a.is_rational():
        q = a.coeffs[0]
        return (q > 0) - (q < 0)
    mass = sum(abs(c) for c in a.coeffs)
    bits = 64
    while True:
        val = a.to_complex(prec=bits).real
        with mpmath.workprec(bits):
            # each of the phi(n) terms is accurate to a few ulps at this precision
            bound = (mpmath.mpf(mass.numerator) / mass.denominator) * len(a.coeffs) * mpmath.ldexp(1, 8 - bits)
            if abs(val) > bound:
                return 1 if val > 0 else -1
        bits *= 2


def parse_element(obj, field: Union[str, dict] = "rational") -> FieldElement:
    """Decode one coefficient under the form-level field descriptor."""
    if field == "rational":
        return parse_rational(obj)
    if isinstance(field, dict) and "cyclotomic" in field:
        n = int(field["cyclotomic"])
        if isinstance(obj, dict):
            val = CyclotomicNumber.from_json(obj)
            if val.field.order != n:
                val = embed(val, n)
            return val
        return cyclotomic_field(n).from_rational(parse_rational(obj))
    raise FieldError(f"unknown field descriptor {field!r}")


def encode_element(a: FieldElement):
    if isinstance(a, CyclotomicNumber):
        return a.to_json()
    return format_rational(a)
