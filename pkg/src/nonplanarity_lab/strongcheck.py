"""Strong nonplanarity verdicts.

The block-matrix family is strongly nonplanar iff the coefficient
vectors of its Pluecker coordinates span the full minor space, i.e. the
coefficient matrix has rank equal to the minor count c.  The verdict is
decided over Q, which suffices: spanning over Q and over R coincide for
rational-coefficient polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError
from .exactlinalg import left_kernel_basis, rank
from .plucker import coefficient_matrix, minor_count, plucker_embed
from .words import WordSystem, build_psi, distinct_abelianizations

DEFAULT_MAX_M = 4
DEFAULT_MAX_MONOMIALS = 10**7


@dataclass(frozen=True)
class StrongVerdict:
    is_strongly_nonplanar: bool
    rank: int
    c: int
    witness: tuple[Fraction, ...] | None

    def __post_init__(self):
        if self.is_strongly_nonplanar != (self.rank == self.c):
            raise ValueError("verdict inconsistent with rank")
        if self.is_strongly_nonplanar == (self.witness is not None):
            raise ValueError("witness present iff not strongly nonplanar")


def check_strong(
    ws: WordSystem,
    *,
    max_m: int = DEFAULT_MAX_M,
    max_monomials: int = DEFAULT_MAX_MONOMIALS,
) -> StrongVerdict:
    """Decide strong nonplanarity of the family defined by ws."""
    if ws.m > max_m:
        raise BudgetExceededError(f"matrix size {ws.m} exceeds cap {max_m}")
    b = build_psi(ws)
    plk = plucker_embed(b, det_size_bound=max(8, ws.m))
    total_terms = sum(p.num_terms() for p in plk.coords)
    if total_terms > max_monomials:
        raise BudgetExceededError(
            f"{total_terms} monomials exceed cap {max_monomials}"
        )
    mat, _ = coefficient_matrix(plk)
    c = minor_count(ws.m, ws.m * ws.n)
    r = rank(mat)
    if r == c:
        return StrongVerdict(True, r, c, None)
    # A hyperplane witness: any nonzero functional on the minor space
    # annihilating every coefficient vector, i.e. a kernel vector of the
    # coefficient matrix.  Take the relation involving the latest
    # coordinate in the enumeration order, so the witness exposes the
    # dependence among the largest minors when one exists.
    kernel = left_kernel_basis(mat.transpose())
    witness = tuple(kernel[-1])
    return StrongVerdict(False, r, c, witness)


@dataclass(frozen=True)
class Theorem3Report:
    is_strongly_nonplanar: bool
    has_distinct_abelianizations: bool

    @property
    def consistent(self) -> bool:
        return self.is_strongly_nonplanar == self.has_distinct_abelianizations


def check_strong_theorem3(ws: WordSystem, **caps) -> Theorem3Report:
    """Compare the rank verdict with distinctness of abelianizations."""
    verdict = check_strong(ws, **caps)
    return Theorem3Report(
        verdict.is_strongly_nonplanar, distinct_abelianizations(ws)
    )
