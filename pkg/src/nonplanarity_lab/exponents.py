"""Numeric estimation of irrationality exponents by shell enumeration.

For an m x n real matrix A, the (multiplicative) irrationality exponent
is a limsup over integer vectors q of a logarithmic approximation ratio,
with p the componentwise nearest-integer vector to A q.  A finite scan
over a shell Q/2 < ||q||_inf <= Q yields an estimate, never a verdict;
the inner cutoff mimics the limsup, which discards any fixed finite set
of small q.

Residuals that look like exact zeros are rechecked in exact rational
arithmetic (every float is a dyadic rational), so true zeros produce an
infinity flag instead of a float artifact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

ZERO_TOL = 1e-12


@dataclass(frozen=True)
class ExponentEstimate:
    value: float  # math.inf when the flag is set
    is_infinite: bool
    best_q: tuple[int, ...]
    best_p: tuple[int, ...]
    Q: int

    def as_dict(self) -> dict:
        return {
            "value": None if self.is_infinite else self.value,
            "is_infinite": self.is_infinite,
            "best_q": list(self.best_q),
            "best_p": list(self.best_p),
            "Q": self.Q,
        }


def _as_matrix(a) -> tuple[np.ndarray, list[list[Fraction]]]:
    rows = [list(r) for r in a]
    exact = [[Fraction(v) for v in row] for row in rows]
    floats = np.array([[float(v) for v in row] for row in rows], dtype=np.float64)
    return floats, exact


def _exact_residuals(exact, q, p) -> list[Fraction]:
    out = []
    for i, row in enumerate(exact):
        s = sum((c * qj for c, qj in zip(row, q)), Fraction(0)) - p[i]
        out.append(s)
    return out


def _log_abs_fraction(x: Fraction) -> float:
    # Safe for magnitudes that would underflow float conversion.
    return math.log(abs(x.numerator)) - math.log(x.denominator)


def _scan(
    a, Q: int, multiplicative: bool, zero_tol: float, q_lo: int | None
) -> ExponentEstimate:
    """Lex-ordered scan of the shell q_lo < ||q||_inf <= Q; first maximum wins ties."""
    if Q < 2:
        raise ValueError("Q must be >= 2")
    if q_lo is None:
        q_lo = Q // 2
    if not 0 <= q_lo < Q:
        raise ValueError("q_lo must satisfy 0 <= q_lo < Q")
    floats, exact = _as_matrix(a)
    m, n = floats.shape
    qs_last = np.arange(-Q, Q + 1, dtype=np.float64)
    best_ratio = -math.inf
    best_q: tuple[int, ...] | None = None
    best_p: tuple[int, ...] | None = None

    absq_last = np.abs(qs_last)
    for prefix in product(range(-Q, Q + 1), repeat=n - 1):
        # r[i, j] = (A q)_i with q = prefix + (qs_last[j],)
        base = floats[:, : n - 1] @ np.array(prefix, dtype=np.float64) if n > 1 else 0.0
        r = np.outer(floats[:, n - 1], qs_last)
        if n > 1:
            r = r + np.asarray(base).reshape(m, 1)
        p = np.rint(r)
        res = np.abs(r - p)

        if multiplicative:
            numer = -np.sum(np.log(np.maximum(res, 1e-300)), axis=0)
            denom_prefix = sum(math.log(max(abs(x), 1)) for x in prefix)
            denom = denom_prefix + np.log(np.maximum(absq_last, 1.0))
            suspicious = np.min(res, axis=0) < zero_tol
        else:
            resmax = np.max(res, axis=0)
            numer = -np.log(np.maximum(resmax, 1e-300))
            qmax_prefix = max((abs(x) for x in prefix), default=0)
            denom = np.log(np.maximum(np.maximum(absq_last, float(qmax_prefix)), 1e-300))
            suspicious = resmax < zero_tol

        qmax_pref = float(max((abs(x) for x in prefix), default=0))
        in_shell = np.maximum(absq_last, qmax_pref) > q_lo

        # Candidates needing exact arithmetic are rare; handle them alone.
        for j in np.nonzero(suspicious & in_shell)[0]:
            q = prefix + (int(qs_last[j]),)
            if all(x == 0 for x in q):
                continue
            pj = tuple(int(x) for x in p[:, j])
            exact_res = _exact_residuals(exact, q, pj)
            if multiplicative:
                hit_zero = any(x == 0 for x in exact_res)
                num = None if hit_zero else -sum(_log_abs_fraction(x) for x in exact_res)
            else:
                hit_zero = all(x == 0 for x in exact_res)
                num = (
                    None
                    if hit_zero
                    else -max(_log_abs_fraction(x) for x in exact_res)
                )
            if hit_zero:
                if best_ratio != math.inf:
                    best_ratio, best_q, best_p = math.inf, q, pj
                continue
            den = float(denom[j])
            if den <= 0.0:
                continue
            ratio = num / den
            if ratio > best_ratio:
                best_ratio, best_q, best_p = ratio, q, pj

        valid = (denom > 0.0) & ~suspicious & in_shell
        if not valid.any():
            continue
        ratios = np.where(valid, numer / np.where(valid, denom, 1.0), -math.inf)
        j = int(np.argmax(ratios))
        ratio = float(ratios[j])
        if ratio > best_ratio:
            best_ratio = ratio
            best_q = prefix + (int(qs_last[j]),)
            best_p = tuple(int(x) for x in p[:, j])
    assert best_q is not None and best_p is not None
    return ExponentEstimate(
        value=best_ratio,
        is_infinite=best_ratio == math.inf,
        best_q=best_q,
        best_p=best_p,
        Q=Q,
    )


def estimate_omega(
    a, Q: int, zero_tol: float = ZERO_TOL, q_lo: int | None = None
) -> ExponentEstimate:
    """Estimate the exponent of irrationality.

    Scans the shell q_lo < ||q||_inf <= Q; by default q_lo = Q // 2.
    The exponent is a limsup, which only sees large ||q||: including the
    whole box would let a handful of tiny q dominate the maximum with
    ratios the limsup discards.  Pass q_lo=0 for the full box.
    """
    return _scan(a, Q, multiplicative=False, zero_tol=zero_tol, q_lo=q_lo)


def estimate_omega_x(
    a, Q: int, zero_tol: float = ZERO_TOL, q_lo: int | None = None
) -> ExponentEstimate:
    """Estimate the exponent of multiplicative irrationality.

    Same shell convention as estimate_omega.
    """
    return _scan(a, Q, multiplicative=True, zero_tol=zero_tol, q_lo=q_lo)


def _numeric_psi(x: list[list[float]], n: int) -> list[list[float]]:
    """Columnwise direct sum X | X^2 | ... | X^n for a square float X."""
    xm = np.array(x, dtype=np.float64)
    blocks = []
    power = xm
    for _ in range(n):
        blocks.append(power)
        power = power @ xm
    return np.hstack(blocks).tolist()


@dataclass(frozen=True)
class BakerReport:
    m: int
    n: int
    Q: int
    trials: int
    seed: int
    estimates: tuple[ExponentEstimate, ...]
    samples: tuple  # sampled X matrices, row-major

    @property
    def finite_values(self) -> list[float]:
        return [e.value for e in self.estimates if not e.is_infinite]

    @property
    def num_infinite(self) -> int:
        return sum(1 for e in self.estimates if e.is_infinite)

    @property
    def median(self) -> float | None:
        vals = sorted(self.finite_values)
        if not vals:
            return None
        k = len(vals)
        mid = k // 2
        return vals[mid] if k % 2 else (vals[mid - 1] + vals[mid]) / 2.0

    @property
    def max(self) -> float | None:
        vals = self.finite_values
        return max(vals) if vals else None

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "Q": self.Q,
            "trials": self.trials,
            "seed": self.seed,
            "per_trial": [
                {"trial": i, "sample": s, **e.as_dict()}
                for i, (s, e) in enumerate(zip(self.samples, self.estimates))
            ],
            "median_finite": self.median,
            "max_finite": self.max,
            "num_infinite": self.num_infinite,
        }


def baker_experiment(
    m: int,
    n: int,
    Q: int,
    trials: int,
    seed: int,
    forced_samples: Sequence | None = None,
) -> BakerReport:
    """Monte-Carlo multiplicative-exponent experiment for X | X^2 | ... | X^n.

    Samples X uniformly in [0,1]^(m x m); forced_samples, when given,
    override the leading trials (used to pin rational inputs in tests).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    estimates = []
    samples = []
    for trial in range(trials):
        x = [[rng.random() for _ in range(m)] for _ in range(m)]
        if forced_samples is not None and trial < len(forced_samples):
            x = [list(row) for row in forced_samples[trial]]
        samples.append([list(row) for row in x])
        mat = _numeric_psi(x, n)
        estimates.append(estimate_omega_x(mat, Q))
    return BakerReport(m, n, Q, trials, seed, tuple(estimates), tuple(samples))
