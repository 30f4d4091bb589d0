"""Binary forms over Q or Q(zeta_n).

A form of degree d is stored as d+1 coefficients; entry ``a`` multiplies
``x**(d-a) * y**a``. The same representation houses dual forms g(X, Y) that act
by differentiation (the apolar action ``g o F = g(d/dx, d/dy) F``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from . import poly
from .field import (CyclotomicNumber, FieldElement, FieldError, encode_element,
                    parse_element, simplify)
from .linalg import ExactMatrix, kernel, rank, rref


class FormError(ValueError):
    """Invalid input to a form operation (zero form, degree mismatch, singular matrix)."""


def _is_zero(c) -> bool:
    return c == 0


def falling(m: int, n: int) -> int:
    """``m!/(m-n)!`` when ``m >= n >= 0``, else 0."""
    if n < 0 or m < n:
        return 0
    out = 1
    for k in range(m - n + 1, m + 1):
        out *= k
    return out


@dataclass(frozen=True)
class BinaryForm:
    coeffs: Tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise FormError("a form needs at least one coefficient")
        object.__setattr__(self, "coeffs",
                           tuple(c if isinstance(c, CyclotomicNumber) else Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, d: int) -> "BinaryForm":
        return cls((Fraction(0),) * (d + 1))

    @classmethod
    def monomial(cls, d: int, a: int, c=1) -> "BinaryForm":
        """``c * x**(d-a) * y**a``."""
        coeffs = [Fraction(0)] * (d + 1)
        coeffs[a] = c
        return cls(tuple(coeffs))

    @classmethod
    def linear(cls, u, v) -> "BinaryForm":
        """``u*x + v*y``."""
        return cls((u, v))

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise FormError(f"cannot add forms of degree {self.degree} and {other.degree}")
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise FormError(f"cannot subtract forms of degree {self.degree} and {other.degree}")
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "BinaryForm":
        return BinaryForm(tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if _is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    if not _is_zero(b):
                        out[i + j] = out[i + j] + a * b
            return BinaryForm(tuple(out))
        return self.scale(other)

    __rmul__ = scale

    def __pow__(self, k: int) -> "BinaryForm":
        out = BinaryForm((Fraction(1),))
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, x0, y0):
        d = self.degree
        return sum((c * x0 ** (d - a) * y0 ** a for a, c in enumerate(self.coeffs) if not _is_zero(c)),
                   Fraction(0))

    def dehomogenize(self) -> List:
        """``F(x, 1)`` as an ascending coefficient list in x."""
        return poly.trim(list(reversed(self.coeffs)))

    def y_multiplicity(self) -> int:
        """Largest m with y**m dividing the form."""
        m = 0
        for c in self.coeffs:
            if not _is_zero(c):
                break
            m += 1
        return m

    def field(self):
        """``"rational"`` or ``{"cyclotomic": n}`` for the smallest field holding the coefficients."""
        orders = {c.field.order for c in self.coeffs if isinstance(c, CyclotomicNumber) and not c.is_rational()}
        if not orders:
            return "rational"
        if len(orders) > 1:
            raise FieldError(f"coefficients live in different cyclotomic fields: {sorted(orders)}")
        return {"cyclotomic": orders.pop()}

    def simplify(self) -> "BinaryForm":
        return BinaryForm(tuple(simplify(c) for c in self.coeffs))

    def to_json(self) -> dict:
        form = self.simplify()
        return {"degree": form.degree, "field": form.field(),
                "coeffs": [encode_element(c) for c in form.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "BinaryForm":
        if not isinstance(obj, dict):
            raise FormError(f"a form must be a JSON object, got {obj!r}")
        try:
            degree = int(obj["degree"])
            raw = obj["coeffs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise FormError(f"form JSON needs integer 'degree' and list 'coeffs': {obj!r}") from exc
        if not isinstance(raw, list) or len(raw) != degree + 1:
            raise FormError(f"degree {degree} needs {degree + 1} coefficients, got {raw!r}")
        field = obj.get("field", "rational")
        return cls(tuple(parse_element(c, field) for c in raw))

    def to_str(self, variables: Tuple[str, str] = ("x", "y")) -> str:
        xv, yv = variables
        d = self.degree
        terms = []
        for a, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            px, py = d - a, a
            mono = "*".join(
                part for part in (
                    (xv if px == 1 else f"{xv}^{px}") if px else "",
                    (yv if py == 1 else f"{yv}^{py}") if py else "",
                ) if part)
            cs = str(c)
            if isinstance(c, CyclotomicNumber) and not c.is_rational():
                cs = f"({cs})"
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_str()


X = BinaryForm.linear(1, 0)
Y = BinaryForm.linear(0, 1)


def _require_nonzero(F: BinaryForm, what: str = "form"):
    if F.is_zero():
        raise FormError(f"zero {what} is not allowed here")


# ---------------------------------------------------------------------------
# apolarity


def apolar_apply(g: BinaryForm, F: BinaryForm) -> BinaryForm:
    """``g(d/dx, d/dy) F``, a form of degree ``deg F - deg g``."""
    e, d = g.degree, F.degree
    if e > d:
        raise FormError(f"apolar action needs deg g <= deg F, got {e} > {d}")
    out = [Fraction(0)] * (d - e + 1)
    for b, gc in enumerate(g.coeffs):
        if _is_zero(gc):
            continue
        # X**(e-b) Y**b o x**(d-a) y**a -> x**(d-a-e+b) y**(a-b)
        for a, fc in enumerate(F.coeffs):
            if _is_zero(fc) or a < b or d - a < e - b:
                continue
            w = falling(d - a, e - b) * falling(a, b)
            out[a - b] = out[a - b] + gc * fc * w
    return BinaryForm(tuple(out))


def catalecticant(F: BinaryForm, e: int) -> ExactMatrix:
    """(d-e+1) x (e+1) matrix whose column j holds ``X**(e-j) Y**j o F``."""
    d = F.degree
    if not 0 <= e <= d:
        raise FormError(f"catalecticant degree must satisfy 0 <= e <= {d}, got {e}")
    cols = [apolar_apply(BinaryForm.monomial(e, j), F).coeffs for j in range(e + 1)]
    return ExactMatrix.from_columns(cols, nrows=d - e + 1)


def apolar_kernel(F: BinaryForm, e: int) -> List[BinaryForm]:
    """Basis of the degree-e part of the apolar ideal of F."""
    if e > F.degree:
        return [BinaryForm.monomial(e, j) for j in range(e + 1)]
    return [BinaryForm(tuple(v)) for v in kernel(catalecticant(F, e))]


def hilbert_function(F: BinaryForm, i: int) -> int:
    _require_nonzero(F)
    if i < 0:
        raise FormError(f"Hilbert function needs i >= 0, got {i}")
    if i > F.degree:
        return 0
    return rank(catalecticant(F, i))


def derivative_space_dimension(F: BinaryForm, i: int) -> int:
    """Dimension of the span of all degree-i partial derivatives of F.

    Computed by repeated differentiation, independently of the catalecticant.
    """
    _require_nonzero(F)
    d = F.degree
    if i < 0 or i > d:
        return 0
    layer = [list(F.coeffs)]
    for step in range(d - i):
        nxt = []
        for v in layer:
            form = BinaryForm(tuple(v))
            nxt.append(apolar_apply(X, form).coeffs)
            nxt.append(apolar_apply(Y, form).coeffs)
        red, piv = rref(nxt)
        layer = red[:len(piv)] or [[Fraction(0)] * (d - step)]
    return len(rref(layer)[1])


# ---------------------------------------------------------------------------
# roots


def root_multiplicities(F: BinaryForm) -> List[int]:
    """Multiplicity of each distinct projective root, sorted ascending."""
    _require_nonzero(F)
    out: List[int] = []
    m = F.y_multiplicity()
    if m:
        out.append(m)
    for factor, mult in poly.squarefree_decomposition(F.dehomogenize()):
        out.extend([mult] * poly.degree(factor))
    return sorted(out)


def is_square_free(g: BinaryForm) -> bool:
    _require_nonzero(g)
    if g.y_multiplicity() > 1:
        return False
    h = g.dehomogenize()
    return poly.degree(poly.gcd(h, poly.derivative(h))) <= 0


def distinct_root_count(F: BinaryForm) -> int:
    _require_nonzero(F)
    return (1 if F.y_multiplicity() else 0) + poly.degree(poly.squarefree_part(F.dehomogenize()))


def divides(L: BinaryForm, F: BinaryForm) -> bool:
    """Whether the linear form L divides F, by evaluating F at the root of L."""
    if L.degree != 1:
        raise FormError(f"divides() needs a linear form, got degree {L.degree}")
    _require_nonzero(L, "linear form")
    _require_nonzero(F)
    u, v = L.coeffs
    return _is_zero(F.evaluate(v, -u))


def product_of_linear_forms(factors: Iterable[BinaryForm]) -> BinaryForm:
    out = BinaryForm((Fraction(1),))
    for f in factors:
        if f.degree != 1:
            raise FormError(f"expected a linear factor, got degree {f.degree}")
        out = out * f
    return out


def normalize_projective(F: BinaryForm) -> BinaryForm:
    """Scale F so its first nonzero coefficient is 1."""
    _require_nonzero(F)
    lead = next(c for c in F.coeffs if not _is_zero(c))
    inv = Fraction(1) / lead
    return BinaryForm(tuple(c * inv for c in F.coeffs)).simplify()


def proportional(F: BinaryForm, G: BinaryForm) -> bool:
    return F.degree == G.degree and normalize_projective(F) == normalize_projective(G)


# ---------------------------------------------------------------------------
# GL2 action


@dataclass(frozen=True)
class Matrix2:
    """``[[a, b], [c, d]]`` acting on linear forms by ``u*x + v*y -> (a*u + b*v)*x + (c*u + d*v)*y``."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def inverse(self) -> "Matrix2":
        det = self.det()
        if _is_zero(det):
            raise FormError("singular matrix has no inverse")
        inv = Fraction(1) / det
        return Matrix2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def apply(self, point: Sequence) -> Tuple:
        u, v = point
        return (self.a * u + self.b * v, self.c * u + self.d * v)

    def to_rows(self):
        return [[self.a, self.b], [self.c, self.d]]


def gl2_act(alpha: Matrix2, F: BinaryForm) -> BinaryForm:
    """``Sym^d(alpha)(F)``, i.e. ``F(a*x + c*y, b*x + d*y)``."""
    if _is_zero(alpha.det()):
        raise FormError("GL2 action needs an invertible matrix")
    new_x = BinaryForm.linear(alpha.a, alpha.c)
    new_y = BinaryForm.linear(alpha.b, alpha.d)
    d = F.degree
    xp = [BinaryForm((Fraction(1),))]
    yp = [BinaryForm((Fraction(1),))]
    for _ in range(d):
        xp.append(xp[-1] * new_x)
        yp.append(yp[-1] * new_y)
    out = BinaryForm.zero(d)
    for k, c in enumerate(F.coeffs):
        if not _is_zero(c):
            out = out + (xp[d - k] * yp[k]).scale(c)
    return out


def parse_form(obj: Union[str, dict]) -> BinaryForm:
    """Accept a JSON string or an already-decoded dict."""
    if isinstance(obj, str):
        import json

        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise FormError(f"malformed form JSON: {exc}") from exc
    return BinaryForm.from_json(obj)
