"""Exact dense matrices and Gaussian elimination over Q or Q(zeta_n)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int = None) -> "ExactMatrix":
        cols = [list(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls(nrows, len(cols), tuple(cols[j][i] for i in range(nrows) for j in range(len(cols))))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> List[List]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def apply(self, vec: Sequence) -> List:
        return [sum((self[i, j] * vec[j] for j in range(self.cols)), Fraction(0)) for i in range(self.rows)]


def rref(rows: Sequence[Sequence]) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form; the pivot in each column is the first nonzero entry at or below the current row."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(M: ExactMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(rref(M.to_rows())[1])


def kernel(M: ExactMatrix) -> List[List]:
    """Basis of the right null space, one vector per free column (that entry set to 1)."""
    if M.cols == 0:
        return []
    if M.rows == 0:
        return [[Fraction(int(i == j)) for i in range(M.cols)] for j in range(M.cols)]
    red, pivots = rref(M.to_rows())
    basis = []
    for free in (c for c in range(M.cols) if c not in pivots):
        v: List = [Fraction(0)] * M.cols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def reduce_modulo(vec: Sequence, span_rows: Sequence[Sequence]) -> List:
    """Canonical representative of ``vec`` modulo the span of ``span_rows``.

    Pivot coordinates of the reduced echelon form of the span are cleared.
    """
    if not span_rows:
        return list(vec)
    red, pivots = rref(span_rows)
    out = list(vec)
    for row, pc in zip(red, pivots):
        f = out[pc]
        if f != 0:
            out = [a - f * b for a, b in zip(out, row)]
    return out
