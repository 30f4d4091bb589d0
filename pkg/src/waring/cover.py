"""Rank-two binary forms through three fixed roots, via triples of d-th roots of unity.

For a triple of distinct indices (i, j, k) into the d-th roots of unity, a
Moebius map sends the roots x - zeta_i y, x - zeta_j y, x - zeta_k y to three
fixed linear forms; applying it to x^d - y^d gives a rank-two form divisible by
the three fixed forms. The dihedral group of the d-gon acts on triples, and the
fibers of this construction are exactly its orbits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from . import poly
from .field import CyclotomicNumber, cyclotomic_field, embed, is_real, real_sign, root_of_unity
from .forms import (BinaryForm, FormError, Matrix2, X, Y, divides, distinct_root_count, gl2_act,
                    normalize_projective, product_of_linear_forms, proportional)
from .linalg import ExactMatrix, rank as matrix_rank


class CoverError(ValueError):
    pass


Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class RootTriple:
    d: int
    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.d < 3:
            raise CoverError(f"need d >= 3 for a triple of distinct roots, got {self.d}")
        idx = (self.i, self.j, self.k)
        if any(not 0 <= t < self.d for t in idx):
            raise CoverError(f"indices {idx} must lie in 0..{self.d - 1}")
        if len(set(idx)) != 3:
            raise CoverError(f"indices {idx} must be pairwise distinct")

    @property
    def indices(self) -> Triple:
        return (self.i, self.j, self.k)


def all_triples(d: int) -> List[RootTriple]:
    return [RootTriple(d, *t) for t in itertools.permutations(range(d), 3)]


@dataclass(frozen=True)
class DihedralElement:
    """``t -> t + rotation (mod d)``, followed by ``t -> -t`` when reflected."""

    d: int
    rotation: int = 0
    reflected: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % self.d)

    def act_index(self, t: int) -> int:
        t = (t + self.rotation) % self.d
        return (-t) % self.d if self.reflected else t

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        """Composition: ``(self * other)(t) == self(other(t))``."""
        if other.d != self.d:
            raise CoverError("cannot compose dihedral elements of different orders")
        # other: t -> e_o * (t + r_o); self: u -> e_s * (u + r_s)
        e_o = -1 if other.reflected else 1
        e_s = -1 if self.reflected else 1
        # self(other(t)) = e_s*e_o*t + e_s*(e_o*r_o + r_s) = e*(t + r) with e = e_s*e_o
        e = e_s * e_o
        r = e * e_s * (e_o * other.rotation + self.rotation)
        return DihedralElement(self.d, r, e == -1)


def dihedral_group(d: int) -> List[DihedralElement]:
    return [DihedralElement(d, r, refl) for refl in (False, True) for r in range(d)]


def dihedral_act(g: DihedralElement, xi: RootTriple) -> RootTriple:
    if g.d != xi.d:
        raise CoverError("group element and triple have different orders")
    return RootTriple(xi.d, *(g.act_index(t) for t in xi.indices))


# ---------------------------------------------------------------------------
# cross ratios and the Gamma construction


def cross_ratio(z, z1, z2, z3):
    """Value at z of the Moebius map with z1 -> 1, z2 -> 0, z3 -> infinity."""
    if z1 == z2 or z2 == z3 or z1 == z3:
        raise CoverError("cross ratio needs pairwise distinct anchor points")
    if z == z3:
        raise CoverError("cross ratio is infinite at the third anchor point")
    return ((z - z2) * (z1 - z3)) / ((z - z3) * (z1 - z2))


def theta(d: int) -> List[CyclotomicNumber]:
    """The d-th roots of unity in anticlockwise order starting from 1."""
    K = cyclotomic_field(d)
    return [root_of_unity(K, t) for t in range(d)]


def gamma_coefficients(xi: RootTriple) -> Dict[int, CyclotomicNumber]:
    """``{l: c_l}`` with ``c_l`` the cross ratio of the l-th root against the triple."""
    roots = theta(xi.d)
    zi, zj, zk = (roots[t] for t in xi.indices)
    return {l: cross_ratio(roots[l], zi, zj, zk) for l in range(xi.d) if l not in xi.indices}


def gamma_canonical(xi: RootTriple) -> BinaryForm:
    """``(x+y) x y prod_l (x + c_l y)``, projectively normalized."""
    if xi.d < 4:
        raise CoverError(f"the cover needs d >= 4, got {xi.d}")
    factors = [X + Y, X, Y] + [BinaryForm.linear(Fraction(1), c) for c in gamma_coefficients(xi).values()]
    return normalize_projective(product_of_linear_forms(factors))


def _as_point(p) -> Tuple:
    if isinstance(p, BinaryForm):
        if p.degree != 1:
            raise CoverError(f"projective points are given as linear forms, got degree {p.degree}")
        return p.coeffs
    u, v = p
    return (u, v)


def _frame(p1, p2, p3) -> Matrix2:
    """Matrix sending (1:0), (0:1), (1:1) to p1, p2, p3."""
    (a, c), (b, d), (e, f) = p1, p2, p3
    det = a * d - b * c
    if det == 0:
        raise CoverError("frame points coincide")
    # solve lam*p1 + mu*p2 = p3
    lam = (e * d - b * f) / det
    mu = (a * f - e * c) / det
    if lam == 0 or mu == 0:
        raise CoverError("frame points coincide")
    return Matrix2(lam * a, mu * b, lam * c, mu * d)


def mobius_from_three_points(sources: Sequence, targets: Sequence) -> Matrix2:
    """A matrix whose projective class maps each source point to its target.

    Points are coordinate pairs (u, v), or linear forms u*x + v*y; the matrix acts
    on them as on coefficient vectors of linear forms.
    """
    src = [_as_point(p) for p in sources]
    dst = [_as_point(p) for p in targets]
    if len(src) != 3 or len(dst) != 3:
        raise CoverError("need exactly three source and three target points")
    return _frame(*dst) @ _frame(*src).inverse()


def projectively_equal(p, q) -> bool:
    (a, b), (c, d) = _as_point(p), _as_point(q)
    return a * d - b * c == 0 and not (a == 0 and b == 0) and not (c == 0 and d == 0)


CANONICAL_L: Tuple[BinaryForm, BinaryForm, BinaryForm] = (X + Y, X, Y)


def _check_lines(L: Sequence[BinaryForm]):
    if len(L) != 3 or any(l.degree != 1 or l.is_zero() for l in L):
        raise CoverError("need three nonzero linear forms")
    for a, b in itertools.combinations(L, 2):
        if proportional(a, b):
            raise CoverError(f"linear forms {a} and {b} are proportional")


def gamma_matrix(L: Sequence[BinaryForm], xi: RootTriple) -> Matrix2:
    _check_lines(L)
    roots = theta(xi.d)
    sources = [(Fraction(1), -roots[t]) for t in xi.indices]
    return mobius_from_three_points(sources, L)


def gamma_general(L: Sequence[BinaryForm], xi: RootTriple) -> BinaryForm:
    """``[alpha . (x^d - y^d)]`` where [alpha] sends the three roots of the triple to L."""
    if xi.d < 4:
        raise CoverError(f"the cover needs d >= 4, got {xi.d}")
    alpha = gamma_matrix(L, xi)
    d = xi.d
    base = BinaryForm.monomial(d, 0) - BinaryForm.monomial(d, d)
    return normalize_projective(gl2_act(alpha, base))


def enumerate_rank_two(d: int, L: Sequence[BinaryForm] = CANONICAL_L) -> Dict[BinaryForm, List[RootTriple]]:
    """Image of the construction over all triples, with the triples hitting each form."""
    if d < 4:
        raise CoverError(f"the cover needs d >= 4, got {d}")
    _check_lines(L)
    canonical = tuple(L) == CANONICAL_L
    image: Dict[BinaryForm, List[RootTriple]] = {}
    for xi in all_triples(d):
        F = gamma_canonical(xi) if canonical else gamma_general(L, xi)
        image.setdefault(F, []).append(xi)
    return image


# ---------------------------------------------------------------------------
# partitions


Partition = FrozenSet[FrozenSet[Hashable]]


def partition_by(items: Iterable, key: Callable) -> Partition:
    blocks: Dict = {}
    for it in items:
        blocks.setdefault(key(it), set()).add(it)
    return frozenset(frozenset(b) for b in blocks.values())


def partitions_equal(A: Iterable[Iterable], B: Iterable[Iterable]) -> bool:
    A = frozenset(frozenset(b) for b in A)
    B = frozenset(frozenset(b) for b in B)
    ground_a = frozenset().union(*A) if A else frozenset()
    ground_b = frozenset().union(*B) if B else frozenset()
    if ground_a != ground_b:
        raise CoverError("partitions cover different ground sets")
    return A == B


def is_finer(A: Iterable[Iterable], B: Iterable[Iterable]) -> bool:
    B = [frozenset(b) for b in B]
    return all(any(frozenset(a) <= b for b in B) for a in A)


@dataclass(frozen=True)
class OrbitPartition:
    d: int
    blocks: Tuple[Tuple[RootTriple, ...], ...]

    def as_partition(self) -> Partition:
        return frozenset(frozenset(b) for b in self.blocks)


def canonical_representative(xi: RootTriple) -> Triple:
    return min(dihedral_act(g, xi).indices for g in dihedral_group(xi.d))


def orbits(d: int) -> OrbitPartition:
    if d < 4:
        raise CoverError(f"orbit enumeration needs d >= 4, got {d}")
    blocks: Dict[Triple, List[RootTriple]] = {}
    for xi in all_triples(d):
        blocks.setdefault(canonical_representative(xi), []).append(xi)
    return OrbitPartition(d, tuple(tuple(blocks[key]) for key in sorted(blocks)))


# ---------------------------------------------------------------------------
# arc counts


def _open_arc(a: int, b: int, avoid: int, d: int) -> List[int]:
    """Indices strictly inside the circular arc from a to b that does not contain ``avoid``."""
    ccw = [(a + t) % d for t in range(1, (b - a) % d)]
    if avoid not in ccw:
        return ccw
    return [(b + t) % d for t in range(1, (a - b) % d)]


def _arcs(xi: RootTriple) -> Tuple[List[int], List[int], List[int]]:
    i, j, k = xi.indices
    d = xi.d
    return _open_arc(i, j, k, d), _open_arc(j, k, i, d), _open_arc(k, i, j, d)


def arc_counts(xi: RootTriple) -> Tuple[int, int, int]:
    return tuple(len(arc) for arc in _arcs(xi))


def m_map(xi: RootTriple) -> Tuple[int, int, int]:
    """Number of distinct values of ``-cross_ratio(p, zeta_i; zeta_j, zeta_k)`` over each arc."""
    roots = theta(xi.d)
    zi, zj, zk = (roots[t] for t in xi.indices)
    out = []
    for arc in _arcs(xi):
        out.append(len({-cross_ratio(roots[p], zi, zj, zk) for p in arc}))
    return tuple(out)


def image_of_arc_counts(d: int) -> set:
    return {arc_counts(xi) for xi in all_triples(d)}


# ---------------------------------------------------------------------------
# reality and transversality


def _sturm_real_root_count(p: List) -> int:
    """Distinct real roots of a real polynomial (exact coefficients), by Sturm's theorem."""
    p = poly.squarefree_part(p)
    if poly.degree(p) <= 0:
        return 0
    seq = [p, poly.derivative(p)]
    while poly.degree(seq[-1]) > 0:
        rem = poly.divmod_poly(seq[-2], seq[-1])[1]
        if not rem:
            break
        seq.append(poly.scale(rem, -1))

    def variations(at_plus: bool) -> int:
        signs = []
        for f in seq:
            s = real_sign(f[-1])
            if not at_plus and poly.degree(f) % 2 == 1:
                s = -s
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(False) - variations(True)


def real_root_count(F: BinaryForm) -> int:
    """Distinct real projective roots of a form with real coefficients."""
    if not all(is_real(c) for c in F.coeffs):
        raise FormError("real root count needs real coefficients")
    return (1 if F.y_multiplicity() else 0) + _sturm_real_root_count(F.dehomogenize())


def hyperbolicity_check(F: BinaryForm, xi: Optional[RootTriple] = None) -> bool:
    """True iff F has real coefficients and all of its roots are real.

    When ``xi`` is given, F must be ``gamma_canonical(xi)`` and the roots are
    read off the cross-ratio factors as well; both views have to agree.
    """
    if F.is_zero():
        raise FormError("zero form is not allowed here")
    if not all(is_real(c) for c in F.coeffs):
        return False
    sturm = real_root_count(F) == distinct_root_count(F)
    if xi is None:
        return sturm
    if normalize_projective(F) != gamma_canonical(xi):
        raise CoverError("form is not the canonical image of the given triple")
    factors = all(is_real(c) for c in gamma_coefficients(xi).values())
    if factors != sturm:
        raise AssertionError("factor-wise and Sturm reality tests disagree")
    return factors


def in_pi(F: BinaryForm, L: Sequence[BinaryForm] = CANONICAL_L) -> bool:
    return all(divides(l, F) for l in L)


def terracini_matrix(l: BinaryForm, t: BinaryForm, d: int) -> ExactMatrix:
    """Pull-back of the three root conditions at (1:0), (0:1), (1:-1) to the tangent space at l^d + t^d."""
    lp = l ** (d - 1)
    tp = t ** (d - 1)
    a1, a2, a3 = lp.evaluate(1, 0), lp.evaluate(0, 1), lp.evaluate(1, -1)
    b1, b2, b3 = tp.evaluate(1, 0), tp.evaluate(0, 1), tp.evaluate(1, -1)
    zero = Fraction(0)
    return ExactMatrix.from_rows([
        [a1, zero, b1, zero],
        [zero, a2, zero, b2],
        [a3, -a3, b3, -b3],
    ])


def terracini_transversality(l: BinaryForm, t: BinaryForm, d: int) -> bool:
    if l.degree != 1 or t.degree != 1:
        raise CoverError("Terracini check needs two linear forms")
    if proportional(l, t):
        raise CoverError("linear forms must be non-proportional")
    F = l ** d + t ** d
    if F.is_zero() or not in_pi(F):
        raise CoverError("l^d + t^d must be divisible by x, y and x + y")
    return matrix_rank(terracini_matrix(l, t, d)) == 3


def terracini_pair(xi: RootTriple) -> Tuple[BinaryForm, BinaryForm]:
    """(l, t) with ``l^d + t^d`` proportional to the canonical image of ``xi``.

    With alpha the Moebius matrix of the triple, l = alpha . x and t = w * (alpha . y)
    where w is a primitive 2d-th root of unity, so t^d = -(alpha . y)^d.
    """
    d = xi.d
    alpha = gamma_matrix(CANONICAL_L, xi)
    big = 2 * d
    w = root_of_unity(big, 1)
    l = BinaryForm(tuple(embed(c, big) for c in (alpha.a, alpha.c)))
    t = BinaryForm(tuple(embed(c, big) * w for c in (alpha.b, alpha.d)))
    target = BinaryForm(tuple(embed(c, big) for c in gamma_canonical(xi).coeffs))
    if normalize_projective(l ** d + t ** d) != normalize_projective(target):
        raise AssertionError("re-expansion of l^d + t^d does not reproduce the enumerated form")
    return l, t


def cover_report(d: int, L: Sequence[BinaryForm] = CANONICAL_L, transversality: bool = True) -> dict:
    """Counts, partitions and checks for one degree."""
    image = enumerate_rank_two(d, L)
    triples = all_triples(d)
    orb = orbits(d)
    fibers = frozenset(frozenset(v) for v in image.values())
    n_part = partition_by(triples, arc_counts)
    eq = partitions_equal(fibers, orb.as_partition()) and partitions_equal(fibers, n_part)
    forms = sorted(image, key=lambda F: str(F.to_json()))
    report = {
        "d": d,
        "L": [l.to_json() for l in L],
        "triple_count": len(triples),
        "orbit_count": len(orb.blocks),
        "orbit_sizes": sorted({len(b) for b in orb.blocks}),
        "image_size": len(image),
        "n_image_size": len(image_of_arc_counts(d)),
        "expected": comb(d - 1, 2),
        "forms": [F.to_json() for F in forms],
        "partitions_equal": eq,
    }
    if transversality and tuple(L) == CANONICAL_L:
        report["transversality_all"] = all(
            terracini_transversality(*terracini_pair(xis[0]), d) for xis in image.values())
    return report
