"""Exact nonplanarity checkers for matrix-monomial manifolds.

Library layout:

- multiset, exactlinalg, polyring: exact arithmetic foundations
- words, plucker, strongcheck:    the strong nonplanarity verdict
- paths:                          path-expansion oracle and lemma checks
- groebner, weakcheck:            complex-case weak nonplanarity
- exponents:                      numeric Diophantine exponent estimates
- parsing, cli, report:           front end and report rendering
"""

from .errors import BudgetExceededError
from .exactlinalg import Rat, RatMatrix
from .multiset import Multiset
from .polyring import Poly, PolyMatrix
from .strongcheck import StrongVerdict, check_strong, check_strong_theorem3
from .weakcheck import Parameterization, WeakStatus, WeakVerdict, check_weak_complex
from .words import Word, WordSystem, veronese_system

__all__ = [
    "BudgetExceededError",
    "Multiset",
    "Parameterization",
    "Poly",
    "PolyMatrix",
    "Rat",
    "RatMatrix",
    "StrongVerdict",
    "WeakStatus",
    "WeakVerdict",
    "Word",
    "WordSystem",
    "check_strong",
    "check_strong_theorem3",
    "check_weak_complex",
    "veronese_system",
]

__version__ = "0.1.0"
