"""Noncommutative monomial words and the block-matrix map they induce.

A word is a finite sequence of generator indices; substituting square
matrices for the generators and concatenating the resulting blocks
columnwise produces the matrix family whose nonplanarity the strong
checker decides.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .polyring import PolyMatrix, generic_matrix, matmul


@dataclass(frozen=True)
class Word:
    """Nonempty sequence of generator indices (1-based)."""

    letters: tuple[int, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("word must be nonempty")
        if any(not isinstance(x, int) or x < 1 for x in self.letters):
            raise ValueError("letters must be positive integers")

    def __len__(self) -> int:
        return len(self.letters)

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        parts = []
        prev = None
        run = 0
        for x in self.letters + (0,):
            if x == prev:
                run += 1
                continue
            if prev is not None:
                parts.append(f"x{prev}" if run == 1 else f"x{prev}^{run}")
            prev, run = x, 1
        return "*".join(parts)


@dataclass(frozen=True)
class WordSystem:
    """Matrix size m, generator count r, and the word sequence."""

    m: int
    r: int
    words: tuple[Word, ...]

    def __post_init__(self):
        if self.m < 1 or self.r < 1:
            raise ValueError("m and r must be >= 1")
        if not self.words:
            raise ValueError("word system must contain at least one word")
        for w in self.words:
            if any(x > self.r for x in w.letters):
                raise ValueError(f"letter out of range in {w}: r = {self.r}")

    @property
    def n(self) -> int:
        return len(self.words)

    def __str__(self) -> str:
        return "; ".join(str(w) for w in self.words)


def abelianize(w: Word, r: int) -> tuple[int, ...]:
    """Exponent vector: component q counts occurrences of generator q."""
    counts = [0] * r
    for x in w.letters:
        if x > r:
            raise ValueError("letter exceeds generator count")
        counts[x - 1] += 1
    return tuple(counts)


def distinct_abelianizations(ws: WordSystem) -> bool:
    vecs = [abelianize(w, ws.r) for w in ws.words]
    return len(set(vecs)) == len(vecs)


def evaluate_word(w: Word, mats: list[PolyMatrix]) -> PolyMatrix:
    """Ordered product of the given square matrices along the word."""
    size = mats[0].rows
    for m in mats:
        if m.rows != size or m.cols != size:
            raise ValueError("all matrices must be square of equal size")
    out = None
    for x in w.letters:
        if x > len(mats):
            raise ValueError("letter exceeds number of matrices")
        out = mats[x - 1] if out is None else matmul(out, mats[x - 1])
    return out


def column_index(t: int, ell: int, m: int) -> int:
    """1-based column of block ell holding column t of that block."""
    return (ell - 1) * m + t


def decode_column(j: int, m: int) -> tuple[int, int]:
    """Inverse of column_index: j -> (t, ell)."""
    return (j - 1) % m + 1, (j - 1) // m + 1


def build_psi(ws: WordSystem) -> PolyMatrix:
    """Symbolic m x (m*n) matrix: block ell = word ell applied to generics."""
    generics = [generic_matrix(ws.m, q) for q in range(1, ws.r + 1)]
    blocks = [evaluate_word(w, generics) for w in ws.words]
    out = blocks[0]
    for b in blocks[1:]:
        out = out.hstack(b)
    return out


def veronese_system(m: int, n: int, r: int) -> WordSystem:
    """All words x1^n1 * ... * xr^nr with 1 <= sum nk <= n, graded-lex."""
    if m < 1 or n < 1 or r < 1:
        raise ValueError("m, n, r must be >= 1")
    exps = []
    for e in product(range(n + 1), repeat=r):
        if 1 <= sum(e) <= n:
            exps.append(e)
    exps.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    words = []
    for e in exps:
        letters = []
        for q, k in enumerate(e, start=1):
            letters.extend([q] * k)
        words.append(Word(tuple(letters)))
    return WordSystem(m, r, tuple(words))
