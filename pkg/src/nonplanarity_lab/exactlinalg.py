"""Exact linear algebra over the rationals.

Rank, left kernels and row spaces are computed with exact Fraction
arithmetic; no floating point is involved anywhere.  Matrices are stored
as sparse rows (column -> nonzero Fraction), which suits the very sparse
coefficient matrices produced by the Pluecker expansion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction


class RatMatrix:
    """A rows x cols matrix of exact rationals, stored by sparse rows."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, sparse_rows: list[dict] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        self.rows = rows
        self.cols = cols
        if sparse_rows is None:
            sparse_rows = [{} for _ in range(rows)]
        if len(sparse_rows) != rows:
            raise ValueError("row count mismatch")
        self._rows = sparse_rows

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        sparse = []
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged rows")
            sparse.append({j: Fraction(v) for j, v in enumerate(row) if v != 0})
        return cls(rows, cols, sparse)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    def entry(self, i: int, j: int) -> Rat:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("matrix index out of range")
        return self._rows[i].get(j, Fraction(0))

    def row(self, i: int) -> dict:
        return dict(self._rows[i])

    def to_rows(self) -> list[list[Rat]]:
        return [
            [self._rows[i].get(j, Fraction(0)) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def transpose(self) -> "RatMatrix":
        sparse = [dict() for _ in range(self.cols)]
        for i, row in enumerate(self._rows):
            for j, v in row.items():
                sparse[j][i] = v
        return RatMatrix(self.cols, self.rows, sparse)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._rows == other._rows
        )

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"


def _echelon(sparse_rows: Iterable[dict]):
    """Incremental Gaussian elimination.

    Returns (pivots, history) where pivots maps pivot column -> monic
    reduced row, and history records for each input row either the pivot
    column it produced or the combination that reduced it to zero.
    """
    pivots: dict[int, dict] = {}
    combos: dict[int, dict] = {}  # pivot col -> combination over input rows
    history = []
    for idx, raw in enumerate(sparse_rows):
        row = dict(raw)
        combo = {idx: Fraction(1)}
        while True:
            if not row:
                break
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                break
            factor = row[col]
            for j, v in piv.items():
                new = row.get(j, Fraction(0)) - factor * v
                if new:
                    row[j] = new
                else:
                    row.pop(j, None)
            pcombo = combos[col]
            for k, v in pcombo.items():
                new = combo.get(k, Fraction(0)) - factor * v
                if new:
                    combo[k] = new
                else:
                    combo.pop(k, None)
        if row:
            col = min(row)
            lead = row[col]
            row = {j: v / lead for j, v in row.items()}
            combo = {k: v / lead for k, v in combo.items()}
            pivots[col] = row
            combos[col] = combo
            history.append(("pivot", col))
        else:
            history.append(("zero", combo))
    return pivots, history


def rank(m: RatMatrix) -> int:
    pivots, _ = _echelon(m._rows)
    return len(pivots)


def left_kernel_basis(m: RatMatrix) -> list[list[Rat]]:
    """Basis of {v : v . M = 0}, one dense vector per basis element."""
    _, history = _echelon(m._rows)
    basis = []
    for event, payload in history:
        if event == "zero":
            vec = [Fraction(0)] * m.rows
            for k, v in payload.items():
                vec[k] = v
            basis.append(vec)
    return basis


def row_space_basis(m: RatMatrix) -> RatMatrix:
    """Fully reduced (RREF) basis of the row space of M."""
    pivots, _ = _echelon(m._rows)
    # Back-substitute so each pivot column is cleared from other rows.
    cols = sorted(pivots, reverse=True)
    for col in cols:
        row = pivots[col]
        for other_col in cols:
            if other_col == col:
                continue
            other = pivots[other_col]
            factor = other.get(col)
            if factor is None:
                continue
            for j, v in row.items():
                new = other.get(j, Fraction(0)) - factor * v
                if new:
                    other[j] = new
                else:
                    other.pop(j, None)
    ordered = [pivots[c] for c in sorted(pivots)]
    return RatMatrix(len(ordered), m.cols, ordered)


def matvec(m: RatMatrix, v: Sequence) -> list[Rat]:
    if len(v) != m.cols:
        raise ValueError("dimension mismatch")
    out = []
    for row in m._rows:
        out.append(sum((coef * Fraction(v[j]) for j, coef in row.items()), Fraction(0)))
    return out
