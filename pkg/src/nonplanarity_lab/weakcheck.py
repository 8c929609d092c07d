"""Complex-case weak nonplanarity of polynomially parameterized manifolds.

For M = f(R^k) inside the m x n matrices, M meets some hyperplane set
{Y : det(A Y + B) = 0} with (A, B) complex and nonzero iff the system of
coefficient polynomials of det(A f(x) + B), collected per x-monomial,
has a nonzero common complex root.  By the Nullstellensatz that happens
iff some entry variable of A or B has no power inside the coefficient
ideal.

A verdict of ComplexSolutionExists is inconclusive for real weak
nonplanarity: the manifold may still avoid every real hyperplane set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceededError
from .groebner import radical_member
from .multiset import Multiset
from .polyring import Poly, PolyMatrix, matmul, sym_det

IMAG_VAR = "~i"  # internal symbol for sqrt(-1); reduced via i^2 = -1


def param_var(j: int) -> str:
    return f"x{j}"


def a_var(i: int, j: int) -> str:
    return f"a[{i},{j}]"


def b_var(i: int, j: int) -> str:
    return f"b[{i},{j}]"


@dataclass(frozen=True)
class Parameterization:
    """Polynomial map f: R^k -> m x n matrices, entries in x1..xk."""

    k: int
    m: int
    n: int
    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        if self.k < 1 or self.m < 1 or self.n < 1:
            raise ValueError("k, m, n must be >= 1")
        if len(self.entries) != self.m or any(
            len(row) != self.n for row in self.entries
        ):
            raise ValueError("entry grid must be m x n")
        allowed = {param_var(j) for j in range(1, self.k + 1)}
        for row in self.entries:
            for p in row:
                extra = p.variables() - allowed
                if extra:
                    raise ValueError(f"unknown variables in entry: {sorted(extra)}")

    def matrix(self) -> PolyMatrix:
        return PolyMatrix([list(row) for row in self.entries])

    def param_vars(self) -> set:
        return {param_var(j) for j in range(1, self.k + 1)}


class WeakStatus(Enum):
    WEAKLY_NONPLANAR_COMPLEX = "weakly_nonplanar_complex"
    COMPLEX_SOLUTION_EXISTS = "complex_solution_exists"


@dataclass(frozen=True)
class WeakVerdict:
    status: WeakStatus
    failing_variable: str | None

    def __post_init__(self):
        want = self.status is WeakStatus.COMPLEX_SOLUTION_EXISTS
        if want != (self.failing_variable is not None):
            raise ValueError("failing variable present iff a solution exists")


def hyperplane_variables(f: Parameterization) -> list[str]:
    """Entry variables of A (n x m) and B (n x n), in a fixed order."""
    out = []
    for i in range(1, f.n + 1):
        for j in range(1, f.m + 1):
            out.append(a_var(i, j))
    for i in range(1, f.n + 1):
        for j in range(1, f.n + 1):
            out.append(b_var(i, j))
    return out


def _symbolic_pencil(f: Parameterization) -> Poly:
    """det(A f(x) + B) with symbolic A and B."""
    a = PolyMatrix(
        [
            [Poly.var(a_var(i, j)) for j in range(1, f.m + 1)]
            for i in range(1, f.n + 1)
        ]
    )
    b = PolyMatrix(
        [
            [Poly.var(b_var(i, j)) for j in range(1, f.n + 1)]
            for i in range(1, f.n + 1)
        ]
    )
    pencil = matmul(a, f.matrix()) + b
    return sym_det(pencil)


def coefficient_ideal(f: Parameterization, max_det_size: int = 8) -> list[Poly]:
    """Generators in the A/B entry variables, one per x-monomial.

    Their common zero set over any field is exactly the set of pairs
    (A, B) for which det(A f(x) + B) vanishes identically in x.
    """
    if f.n > max_det_size:
        raise BudgetExceededError(f"determinant size {f.n} exceeds {max_det_size}")
    det = _symbolic_pencil(f)
    xvars = f.param_vars()
    grouped: dict[Multiset, Poly] = {}
    for mono, coef in det.terms():
        xpart = Multiset({v: e for v, e in mono.items() if v in xvars})
        abpart = Multiset({v: e for v, e in mono.items() if v not in xvars})
        term = Poly({abpart: coef})
        grouped[xpart] = grouped.get(xpart, Poly.zero()) + term
    gens = [p for _, p in sorted(grouped.items(), key=lambda kv: kv[0].expanded())]
    return [p for p in gens if not p.is_zero()]


def check_weak_complex(f: Parameterization, **budget) -> WeakVerdict:
    """All entry variables in the radical -> no nonzero complex (A, B)."""
    gens = coefficient_ideal(f)
    for var in hyperplane_variables(f):
        if not radical_member(var, gens, **budget):
            return WeakVerdict(WeakStatus.COMPLEX_SOLUTION_EXISTS, var)
    return WeakVerdict(WeakStatus.WEAKLY_NONPLANAR_COMPLEX, None)


def _complex_entry(re, im) -> Poly:
    return Poly.const(Fraction(re)) + Poly.const(Fraction(im)) * Poly.var(IMAG_VAR)


def _reduce_imag(p: Poly) -> Poly:
    """Reduce exponents of the imaginary symbol modulo i^2 = -1."""
    out = Poly.zero()
    for mono, coef in p.terms():
        e = mono.count(IMAG_VAR)
        if e:
            rest = {v: k for v, k in mono.items() if v != IMAG_VAR}
            if e % 2:
                rest[IMAG_VAR] = 1
            sign = -1 if (e // 2) % 2 else 1
            out = out + Poly({Multiset(rest): coef * sign})
        else:
            out = out + Poly({mono: coef})
    return out


def verify_complex_witness(
    f: Parameterization,
    a_re: Sequence[Sequence],
    a_im: Sequence[Sequence],
    b_re: Sequence[Sequence],
    b_im: Sequence[Sequence],
) -> bool:
    """Check det(A f(x) + B) == 0 identically, with A = a_re + i*a_im etc."""

    def build(re_rows, im_rows, rows, cols) -> PolyMatrix:
        if len(re_rows) != rows or len(im_rows) != rows:
            raise ValueError("witness shape mismatch")
        grid = []
        for re_row, im_row in zip(re_rows, im_rows):
            if len(re_row) != cols or len(im_row) != cols:
                raise ValueError("witness shape mismatch")
            grid.append([_complex_entry(re, im) for re, im in zip(re_row, im_row)])
        return PolyMatrix(grid)

    a = build(a_re, a_im, f.n, f.m)
    b = build(b_re, b_im, f.n, f.n)
    det = sym_det(matmul(a, f.matrix()) + b)
    return _reduce_imag(det).is_zero()
