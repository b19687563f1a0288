"""Exact linear algebra over the rationals.

Everything here works with fractions.Fraction entries, so ranks,
determinants and kernels are exact.  Pivoting is deterministic
(left-to-right, first nonzero row), which downstream modules rely on
for reproducible basis selection.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence

from .errors import NonSquareError

Scalar = Fraction


def _to_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Mat:
    """Dense rational matrix, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        self.entries: List[List[Fraction]] = [
            [_to_scalar(x) for x in row] for row in entries
        ]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Mat":
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        m = cls.zero(n, n)
        for i in range(n):
            m.entries[i][i] = Fraction(1)
        return m

    def copy_entries(self) -> List[List[Fraction]]:
        return [row[:] for row in self.entries]

    def transpose(self) -> "Mat":
        return Mat([[self.entries[i][j] for i in range(self.rows)]
                    for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat)
                and self.entries == other.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Mat({self.rows}x{self.cols}: {body})"

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = Mat.zero(self.rows, other.cols)
        for i in range(self.rows):
            row = self.entries[i]
            orow = out.entries[i]
            for k in range(self.cols):
                a = row[k]
                if a == 0:
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    orow[j] += a * brow[j]
        return out


def _det_small(a: List[List[Fraction]], n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))


def det(m: Mat) -> Fraction:
    """Determinant via cofactor expansion (size <= 3) or Bareiss."""
    if m.rows != m.cols:
        raise NonSquareError(f"determinant of {m.rows}x{m.cols} matrix")
    n = m.rows
    if n <= 3:
        return _det_small(m.entries, n)
    a = m.copy_entries()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            ai = a[i]
            ak = a[k]
            aik = ai[k]
            for j in range(k + 1, n):
                # Bareiss update: division by the previous pivot is exact.
                ai[j] = (pivot * ai[j] - aik * ak[j]) / prev
            ai[k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def _echelon(entries: List[List[Fraction]], rows: int, cols: int):
    """In-place forward elimination; returns the pivot column list."""
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot_row = None
        for i in range(r, rows):
            if entries[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            entries[r], entries[pivot_row] = entries[pivot_row], entries[r]
        p = entries[r][c]
        for i in range(r + 1, rows):
            f = entries[i][c]
            if f == 0:
                continue
            ratio = f / p
            ri = entries[i]
            rr = entries[r]
            for j in range(c, cols):
                ri[j] -= ratio * rr[j]
        pivots.append(c)
        r += 1
    return pivots


def rank(m: Mat) -> int:
    a = m.copy_entries()
    return len(_echelon(a, m.rows, m.cols))


def pivot_columns(m: Mat) -> List[int]:
    """Pivot columns under deterministic left-to-right elimination."""
    a = m.copy_entries()
    return _echelon(a, m.rows, m.cols)


def pivot_rows(m: Mat) -> List[int]:
    """Row indices that pivot when eliminating top-to-bottom.

    Equal to the pivot columns of the transpose; used to pick basis
    monomials from catalecticant rows.
    """
    return pivot_columns(m.transpose())


def nullspace(m: Mat) -> List[List[Fraction]]:
    """Basis of the right kernel {v : m v = 0}."""
    a = m.copy_entries()
    piv = _echelon(a, m.rows, m.cols)
    # Back-substitute to reduced form.
    for idx in range(len(piv) - 1, -1, -1):
        c = piv[idx]
        p = a[idx][c]
        row = a[idx]
        for j in range(c, m.cols):
            row[j] /= p
        for i in range(idx):
            f = a[i][c]
            if f == 0:
                continue
            ri = a[i]
            for j in range(c, m.cols):
                ri[j] -= f * row[j]
    free = [c for c in range(m.cols) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for idx, c in enumerate(piv):
            v[c] = -a[idx][fc]
        basis.append(v)
    return basis


def mat_vec(m: Mat, v: Sequence[Fraction]) -> List[Fraction]:
    return [sum((row[j] * v[j] for j in range(m.cols)), Fraction(0))
            for row in m.entries]


def from_rows(rows: Iterable[Iterable]) -> Mat:
    return Mat([list(r) for r in rows])
