"""Minor enumeration, the Pluecker embedding, and coefficient matrices.

The embedding sends an m x w matrix to the determinants of all its
minors (every size k >= 1).  The enumeration order is fixed: ascending
minor size, then lexicographic on the row subset, then on the column
subset.  Any fixed order gives the same rank verdict downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .exactlinalg import RatMatrix
from .polyring import Monomial, Poly, PolyMatrix, sym_det


@dataclass(frozen=True, order=True)
class MinorIndex:
    """Row subset I and column subset J with #I = #J >= 1 (1-based)."""

    I: tuple[int, ...]
    J: tuple[int, ...]

    def __post_init__(self):
        if len(self.I) != len(self.J) or not self.I:
            raise ValueError("row and column subsets must have equal size >= 1")
        if list(self.I) != sorted(set(self.I)) or list(self.J) != sorted(set(self.J)):
            raise ValueError("index subsets must be strictly increasing")

    @property
    def size(self) -> int:
        return len(self.I)


def minor_count(m: int, w: int) -> int:
    """Number of minors of an m x w matrix, all sizes counted."""
    if m < 1 or w < 1:
        raise ValueError("dimensions must be >= 1")
    return sum(comb(m, k) * comb(w, k) for k in range(1, min(m, w) + 1))


def enumerate_D(m: int, w: int) -> list[MinorIndex]:
    """All minor indices, in the fixed embedding order."""
    out = []
    for k in range(1, min(m, w) + 1):
        for I in combinations(range(1, m + 1), k):
            for J in combinations(range(1, w + 1), k):
                out.append(MinorIndex(I, J))
    return out


@dataclass(frozen=True)
class PluckerVector:
    """Coordinates of the embedding, indexed parallel to enumerate_D."""

    m: int
    w: int
    coords: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.coords) != minor_count(self.m, self.w):
            raise ValueError("coordinate count does not match minor count")


def plucker_embed(b: PolyMatrix, det_size_bound: int = 8) -> PluckerVector:
    coords = []
    for d in enumerate_D(b.rows, b.cols):
        sub = b.submatrix([i - 1 for i in d.I], [j - 1 for j in d.J])
        coords.append(sym_det(sub, size_bound=det_size_bound))
    return PluckerVector(b.rows, b.cols, tuple(coords))


def coefficient_matrix(c: PluckerVector) -> tuple[RatMatrix, list[Monomial]]:
    """Rows = monomials appearing in any coordinate; columns in D order.

    Entry (F, idx) is the coefficient of monomial F in coordinate idx.
    The constant monomial cannot occur: the embedded matrix vanishes at
    the origin, so every coordinate has zero constant term.
    """
    monos: set = set()
    for p in c.coords:
        monos |= set(p.monomials())
    for mono in monos:
        if mono.cardinality() == 0:
            raise ValueError("unexpected constant term in a Pluecker coordinate")
    ordered = sorted(monos, key=lambda m: m.expanded())
    sparse = []
    for mono in ordered:
        row = {}
        for j, p in enumerate(c.coords):
            v = p.coefficient(mono)
            if v:
                row[j] = v
        sparse.append(row)
    return RatMatrix(len(ordered), len(c.coords), sparse), ordered
