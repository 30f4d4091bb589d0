"""Waring rank of binary forms by Sylvester's algorithm, with replayable certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .field import encode_element
from .forms import (BinaryForm, FormError, apolar_apply, apolar_kernel, catalecticant, divides,
                    is_square_free, root_multiplicities)
from .linalg import rank as matrix_rank, reduce_modulo, rref


class Branch(str, enum.Enum):
    DEG_G1 = "DEG_G1"
    DEG_G2 = "DEG_G2"
    PENCIL = "PENCIL"


class SecantClass(str, enum.Enum):
    ON_CURVE = "ON_CURVE"
    TANGENT = "TANGENT"
    SECANT = "SECANT"
    OUTSIDE = "OUTSIDE"


class CertificateError(AssertionError):
    """A certificate failed to replay against its form."""


@dataclass(frozen=True)
class RankCertificate:
    """Rank of a form together with the apolar data that proves it.

    ``witness`` is the lowest-degree generator g1 (or, for PENCIL, the
    square-free member found in the pencil). For DEG_G2 the rank comes from the
    second generator, and ``secondary_witness`` holds a square-free apolar form
    of degree ``rank`` so the upper bound can be checked directly.
    """

    rank: int
    witness: BinaryForm
    witness_degree: int
    witness_square_free: bool
    branch: Branch
    pencil_parameter: Optional[Fraction] = None
    secondary_witness: Optional[BinaryForm] = None

    def to_json(self) -> dict:
        out = {
            "rank": self.rank,
            "witness": self.witness.to_json(),
            "witness_degree": self.witness_degree,
            "branch": self.branch.value,
            "witness_square_free": self.witness_square_free,
        }
        if self.pencil_parameter is not None:
            out["pencil_parameter"] = encode_element(self.pencil_parameter)
        if self.secondary_witness is not None:
            out["secondary_witness"] = self.secondary_witness.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "RankCertificate":
        from .field import parse_rational

        return cls(
            rank=int(obj["rank"]),
            witness=BinaryForm.from_json(obj["witness"]),
            witness_degree=int(obj.get("witness_degree", obj["witness"]["degree"])),
            witness_square_free=bool(obj["witness_square_free"]),
            branch=Branch(obj["branch"]),
            pencil_parameter=parse_rational(obj["pencil_parameter"]) if "pencil_parameter" in obj else None,
            secondary_witness=BinaryForm.from_json(obj["secondary_witness"]) if "secondary_witness" in obj else None,
        )

    def verify(self, F: BinaryForm) -> None:
        """Replay the certificate against F; raises CertificateError on any mismatch."""
        d = F.degree
        g = self.witness

        def check(cond: bool, msg: str):
            if not cond:
                raise CertificateError(msg)

        check(g.degree == self.witness_degree, "witness degree does not match the recorded degree")
        check(apolar_apply(g, F).is_zero(), "witness is not apolar to the form")
        check(is_square_free(g) == self.witness_square_free, "square-free flag does not match the witness")
        check(1 <= self.rank <= d, f"rank {self.rank} outside 1..{d}")
        e = self.witness_degree
        # nothing apolar below the witness degree (full column rank of the previous catalecticant)
        if e >= 2:
            check(matrix_rank(catalecticant(F, e - 1)) == e, "a lower-degree apolar form exists")
        if self.branch is Branch.DEG_G1:
            check(self.witness_square_free and self.rank == e, "DEG_G1 needs a square-free witness of degree rank")
        elif self.branch is Branch.DEG_G2:
            check(not self.witness_square_free and self.rank == d - e + 2,
                  "DEG_G2 needs a non-square-free witness and rank = d - deg + 2")
            h = self.secondary_witness
            check(h is not None, "DEG_G2 certificate lacks the square-free apolar form of degree rank")
            check(h.degree == self.rank and apolar_apply(h, F).is_zero() and is_square_free(h),
                  "secondary witness is not a square-free apolar form of degree rank")
        else:
            check(self.witness_square_free and self.rank == e and 2 * e == d + 2,
                  "PENCIL needs a square-free witness of degree (d+2)/2")


def _require_rankable(F: BinaryForm):
    if F.is_zero():
        raise FormError("the zero form has no Waring rank")
    if F.degree < 1:
        raise FormError("Waring rank of a constant (degree 0) form is not defined")


def initial_degree(F: BinaryForm) -> Tuple[int, List[BinaryForm]]:
    """Least e >= 1 with a nonzero apolar form of degree e, and a basis of that degree."""
    if F.is_zero():
        raise FormError("the zero form has no apolar ideal of finite colength")
    for e in range(1, F.degree + 2):
        basis = apolar_kernel(F, e)
        if basis:
            return e, basis
    raise AssertionError("unreachable: every form of degree d+1 is apolar")


def _multiples(g: BinaryForm, k: int) -> List[BinaryForm]:
    return [g * BinaryForm.monomial(k, t) for t in range(k + 1)]


def apolar_generators(F: BinaryForm) -> Tuple[BinaryForm, BinaryForm]:
    """Minimal generators (g1, g2) of the apolar ideal, ``deg g1 + deg g2 = d + 2``."""
    e1, basis = initial_degree(F)
    g1 = basis[0]
    e2 = F.degree + 2 - e1
    if len(basis) >= 2:
        g2 = reduce_modulo(basis[1].coeffs, [g1.coeffs])
        return g1, BinaryForm(tuple(g2))
    span = [m.coeffs for m in _multiples(g1, e2 - e1)]
    base_rank = len(span)
    for cand in apolar_kernel(F, e2):
        if matrix_rank_rows(span + [cand.coeffs]) > base_rank:
            return g1, BinaryForm(tuple(reduce_modulo(cand.coeffs, span)))
    raise AssertionError("apolar ideal has no second generator; form is degenerate")


def matrix_rank_rows(rows) -> int:
    return len(rref(rows)[1])


def _square_free_in_pencil(base: BinaryForm, direction: BinaryForm, tries: int):
    for lam in range(tries):
        cand = base + direction.scale(Fraction(lam)) if lam else base
        if not cand.is_zero() and is_square_free(cand):
            return cand, Fraction(lam)
    return None, None


def _square_free_of_degree_e2(g1: BinaryForm, g2: BinaryForm) -> BinaryForm:
    """A square-free member of g2 + lambda * g1 * L**k with L chosen coprime to g2.

    The pencil is then base-point free, so at most 2*deg - 2 values of lambda give
    a repeated root.
    """
    e2 = g2.degree
    k = e2 - g1.degree
    for t in range(e2 + 2):
        L = BinaryForm.linear(Fraction(1), Fraction(t)) if t else BinaryForm.linear(Fraction(0), Fraction(1))
        if divides(L, g2):
            continue
        cand, _ = _square_free_in_pencil(g2, g1 * (L ** k), 2 * e2 + 1)
        if cand is not None:
            return cand
    raise AssertionError("no square-free apolar form found in the degree of g2")


def waring_rank(F: BinaryForm) -> RankCertificate:
    _require_rankable(F)
    d = F.degree
    e1, basis = initial_degree(F)
    if len(basis) == 1:
        g1 = basis[0]
        if is_square_free(g1):
            return RankCertificate(e1, g1, e1, True, Branch.DEG_G1)
        _, g2 = apolar_generators(F)
        h = _square_free_of_degree_e2(g1, g2)
        return RankCertificate(d - e1 + 2, g1, e1, False, Branch.DEG_G2, secondary_witness=h)
    # two independent apolar forms in the initial degree: e1 = (d + 2) / 2
    g, lam = _square_free_in_pencil(basis[0], basis[1], 2 * e1 + 1)
    if g is None:
        raise AssertionError("pencil of generators has no square-free member among the tried parameters")
    return RankCertificate(e1, g, e1, True, Branch.PENCIL, pencil_parameter=lam)


def rank(F: BinaryForm) -> int:
    return waring_rank(F).rank


def classify_secant_point(F: BinaryForm) -> SecantClass:
    """Position of [F] relative to the rational normal curve and its secant variety."""
    _require_rankable(F)
    d = F.degree
    if d < 3:
        raise FormError(f"secant classification needs degree >= 3, got {d}")
    r = rank(F)
    if r == 1:
        return SecantClass.ON_CURVE
    if root_multiplicities(F) == [1, d - 1]:
        return SecantClass.TANGENT
    if r == 2:
        return SecantClass.SECANT
    return SecantClass.OUTSIDE
