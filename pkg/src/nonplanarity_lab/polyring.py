"""Sparse multivariate polynomials over Q, and matrices of them.

Variables are plain strings; a monomial is a Multiset of variable names.
Entries of the generic matrices are named "A[i,t,q]" (row, column,
generator).  Canonical serialized form sorts terms lexicographically on
the expanded variable list, e.g. "3*A[1,2,1]^2*A[2,1,1] - 1/2".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .multiset import Multiset

Monomial = Multiset
ONE = Multiset()

DEFAULT_DET_BOUND = 8


def edge_var(i: int, t: int, q: int) -> str:
    """Variable name for the (i,t) entry of the q-th generic matrix."""
    return f"A[{i},{t},{q}]"


def monomial(exps: Mapping | Sequence) -> Monomial:
    return Multiset(exps)


def _mono_sort_key(m: Monomial):
    return m.expanded()


class Poly:
    """Sparse polynomial: monomial -> nonzero rational coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: dict = {}
        if terms:
            for mono, coef in terms.items():
                coef = Fraction(coef)
                if coef:
                    clean[mono] = coef
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({ONE: Fraction(c)})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return cls.const(1)
        return cls({Multiset({name: exp}): Fraction(1)})

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """(monomial, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: _mono_sort_key(kv[0]))

    def monomials(self):
        return list(self._terms)

    def num_terms(self) -> int:
        return len(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE, Fraction(0))

    def variables(self) -> set:
        out: set = set()
        for mono in self._terms:
            out |= mono.support()
        return out

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(m.cardinality() for m in self._terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coef in other._terms.items():
            new = terms.get(mono, Fraction(0)) + coef
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        p = Poly.__new__(Poly)
        p._terms = terms
        return p

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p._terms = {m: -c for m, c in self._terms.items()}
        return p

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero()
            p = Poly.__new__(Poly)
            p._terms = {m: c * other for m, c in self._terms.items()}
            return p
        if not isinstance(other, Poly):
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 + m2
                new = terms.get(mono, Fraction(0)) + c1 * c2
                if new:
                    terms[mono] = new
                else:
                    terms.pop(mono, None)
        p = Poly.__new__(Poly)
        p._terms = terms
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- evaluation ---------------------------------------------------

    def substitute(self, values: Mapping) -> "Poly":
        """Substitute variables by rationals or polynomials."""
        out = Poly.zero()
        for mono, coef in self._terms.items():
            term = Poly.const(coef)
            for name, exp in mono.items():
                if name in values:
                    val = values[name]
                    if not isinstance(val, Poly):
                        val = Poly.const(val)
                    term = term * val**exp
                else:
                    term = term * Poly.var(name, exp)
            out = out + term
        return out

    def eval_rational(self, values: Mapping) -> Fraction:
        """Evaluate at a full rational point."""
        total = Fraction(0)
        for mono, coef in self._terms.items():
            v = coef
            for name, exp in mono.items():
                v *= Fraction(values[name]) ** exp
            total += v
        return total

    # -- serialization ------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coef in reversed(self.terms()):
            factors = []
            for name, exp in mono.items():
                factors.append(name if exp == 1 else f"{name}^{exp}")
            if not factors:
                body = str(abs(coef))
            elif abs(coef) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coef))] + factors)
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


class PolyMatrix:
    """Matrix with Poly entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Poly]]):
        self.rows = len(entries)
        self.cols = len(entries[0]) if self.rows else 0
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
        self.entries = [[_as_poly(e) for e in row] for row in entries]

    @classmethod
    def zero(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls([[Poly.zero() for _ in range(cols)] for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(
            [
                [Poly.const(1) if i == j else Poly.zero() for j in range(n)]
                for i in range(n)
            ]
        )

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i][j]

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("dimension mismatch")
        return PolyMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(
            [[self.entries[i][j] for j in col_idx] for i in row_idx]
        )

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return PolyMatrix(
            [self.entries[i] + other.entries[i] for i in range(self.rows)]
        )

    def substitute(self, values: Mapping) -> "PolyMatrix":
        return PolyMatrix(
            [[e.substitute(values) for e in row] for row in self.entries]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols})"


def _as_poly(e) -> Poly:
    if isinstance(e, Poly):
        return e
    return Poly.const(e)


def generic_matrix(m: int, q: int) -> PolyMatrix:
    """m x m matrix whose (i,t) entry is the variable A[i,t,q]."""
    if m < 1:
        raise ValueError("matrix size must be >= 1")
    if q < 1:
        raise ValueError("generator index must be >= 1")
    return PolyMatrix(
        [[Poly.var(edge_var(i, t, q)) for t in range(1, m + 1)] for i in range(1, m + 1)]
    )


def matmul(p: PolyMatrix, q: PolyMatrix) -> PolyMatrix:
    if p.cols != q.rows:
        raise ValueError("inner dimensions do not match")
    out = []
    for i in range(p.rows):
        row = []
        for j in range(q.cols):
            acc = Poly.zero()
            for k in range(p.cols):
                a = p.entries[i][k]
                b = q.entries[k][j]
                if a.is_zero() or b.is_zero():
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return PolyMatrix(out)


def sym_det(m: PolyMatrix, size_bound: int = DEFAULT_DET_BOUND) -> Poly:
    """Exact determinant by memoized cofactor expansion."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Poly.const(1)
    if n > size_bound:
        raise ValueError(f"determinant size {n} exceeds bound {size_bound}")
    cache: dict = {}

    def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> Poly:
        if len(rows) == 1:
            return m.entries[rows[0]][cols[0]]
        key = (rows, cols)
        got = cache.get(key)
        if got is not None:
            return got
        i = rows[0]
        rest = rows[1:]
        acc = Poly.zero()
        for pos, j in enumerate(cols):
            e = m.entries[i][j]
            if e.is_zero():
                continue
            sub = minor(rest, cols[:pos] + cols[pos + 1 :])
            term = e * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        cache[key] = acc
        return acc

    return minor(tuple(range(n)), tuple(range(n)))


def coefficient(p: Poly, mono: Monomial) -> Fraction:
    return p.coefficient(mono)
