"""Buchberger's algorithm over Q and radical ideal membership.

Polynomials come in as sparse Poly values; internally they are mapped to
exponent tuples over a fixed variable list so term orders are cheap to
compare.  Radical membership is decided by saturation: some power of v
lies in I iff 1 lies in I + <1 - t*v> for a fresh variable t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BudgetExceededError
from .multiset import Multiset
from .polyring import Poly

DEFAULT_PAIR_BUDGET = 200_000

SATURATION_VAR = "~t"  # fresh name; user variables never start with '~'


@dataclass(frozen=True)
class TermOrder:
    """Monomial order: 'grevlex' or 'lex' over an explicit variable list.

    variables are listed highest-priority first.
    """

    kind: str = "grevlex"
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variables in order")

    def extend(self, extra) -> "TermOrder":
        missing = sorted(set(extra) - set(self.variables))
        return TermOrder(self.kind, self.variables + tuple(missing))

    def key(self, exps: tuple[int, ...]):
        """Sort key: larger key = larger monomial."""
        if self.kind == "lex":
            return exps
        return (sum(exps), tuple(-e for e in reversed(exps)))


# -- conversion between Poly and exponent-tuple form -------------------


def _to_internal(p: Poly, variables: tuple[str, ...]) -> dict:
    index = {v: i for i, v in enumerate(variables)}
    out: dict[tuple[int, ...], Fraction] = {}
    for mono, coef in p.terms():
        exps = [0] * len(variables)
        for name, k in mono.items():
            try:
                exps[index[name]] = k
            except KeyError:
                raise ValueError(f"variable {name!r} not in term order") from None
        out[tuple(exps)] = coef
    return out


def _to_poly(d: dict, variables: tuple[str, ...]) -> Poly:
    terms = {}
    for exps, coef in d.items():
        mono = Multiset({v: e for v, e in zip(variables, exps) if e})
        terms[mono] = coef
    return Poly(terms)


def _leading(d: dict, order: TermOrder):
    return max(d, key=order.key)


def _sub_scaled(a: dict, b: dict, coef: Fraction, shift: tuple[int, ...]) -> dict:
    """a - coef * x^shift * b, in place on a copy of a."""
    out = dict(a)
    for exps, c in b.items():
        key = tuple(e + s for e, s in zip(exps, shift))
        new = out.get(key, Fraction(0)) - coef * c
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _normal_form(f: dict, basis: list[dict], order: TermOrder) -> dict:
    """Full multivariate division remainder of f by the basis."""
    leads = [(_leading(g, order), g) for g in basis]
    remainder: dict = {}
    work = dict(f)
    while work:
        lm = _leading(work, order)
        lc = work[lm]
        for lg, g in leads:
            if _divides(lg, lm):
                shift = tuple(a - b for a, b in zip(lm, lg))
                work = _sub_scaled(work, g, lc / g[lg], shift)
                break
        else:
            remainder[lm] = lc
            del work[lm]
    return remainder


def _s_poly(f: dict, g: dict, order: TermOrder) -> dict:
    lf, lg = _leading(f, order), _leading(g, order)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out: dict = {}
    for exps, c in f.items():
        key = tuple(e + s for e, s in zip(exps, sf))
        out[key] = out.get(key, Fraction(0)) + c / f[lf]
    for exps, c in g.items():
        key = tuple(e + s for e, s in zip(exps, sg))
        new = out.get(key, Fraction(0)) - c / g[lg]
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Poly, ...]
    order: TermOrder
    _internal: tuple = field(repr=False, default=())

    def leading_monomials(self) -> list[Poly]:
        out = []
        for g in self._internal:
            lm = _leading(g, self.order)
            out.append(_to_poly({lm: Fraction(1)}, self.order.variables))
        return out


def buchberger(
    gens: list[Poly],
    order: TermOrder | None = None,
    max_pairs: int = DEFAULT_PAIR_BUDGET,
) -> GroebnerBasis:
    """Reduced monic Groebner basis of the ideal generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    all_vars: set = set()
    for g in gens:
        all_vars |= g.variables()
    if order is None:
        order = TermOrder("grevlex", tuple(sorted(all_vars)))
    else:
        order = order.extend(all_vars)
    variables = order.variables
    if not gens:
        return GroebnerBasis((), order, ())

    basis = [_to_internal(g, variables) for g in gens]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    processed = 0
    while pairs:
        # Normal strategy: smallest lcm of leading monomials first.
        pairs.sort(
            key=lambda ij: order.key(
                tuple(
                    max(a, b)
                    for a, b in zip(
                        _leading(basis[ij[0]], order), _leading(basis[ij[1]], order)
                    )
                )
            ),
            reverse=True,
        )
        i, j = pairs.pop()
        processed += 1
        if processed > max_pairs:
            raise BudgetExceededError("Buchberger pair budget exceeded")
        lf = _leading(basis[i], order)
        lg = _leading(basis[j], order)
        # Buchberger's first criterion: coprime leading monomials.
        if all(a == 0 or b == 0 for a, b in zip(lf, lg)):
            continue
        rem = _normal_form(_s_poly(basis[i], basis[j], order), basis, order)
        if rem:
            basis.append(rem)
            pairs.extend((len(basis) - 1, k) for k in range(len(basis) - 1))

    reduced = _reduce_basis(basis, order)
    polys = tuple(_to_poly(g, variables) for g in reduced)
    return GroebnerBasis(polys, order, tuple(reduced))


def _reduce_basis(basis: list[dict], order: TermOrder) -> list[dict]:
    # Drop generators whose leading monomial is divisible by another's.
    leads = [_leading(g, order) for g in basis]
    keep = []
    for i, g in enumerate(basis):
        if any(
            j != i
            and _divides(leads[j], leads[i])
            and (j < i or leads[j] != leads[i])
            for j in range(len(basis))
        ):
            continue
        keep.append(g)
    # Fully reduce each survivor against the others and make it monic.
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        lm = _leading(g, order)
        tail = dict(g)
        del tail[lm]
        reduced = _normal_form(tail, others, order) if others else tail
        reduced[lm] = g[lm]
        lc = reduced[lm]
        out.append({e: c / lc for e, c in reduced.items()})
    out.sort(key=lambda g: order.key(_leading(g, order)), reverse=True)
    return out


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    order = gb.order.extend(f.variables())
    if order.variables != gb.order.variables:
        # f mentions variables outside the basis universe: they cannot
        # be reduced, but division still works in the larger ring.
        basis = [_to_internal(g, order.variables) for g in gb.generators]
    else:
        basis = list(gb._internal)
    if not basis:
        return f
    return _to_poly(
        _normal_form(_to_internal(f, order.variables), basis, order),
        order.variables,
    )


def ideal_member(f: Poly, gb: GroebnerBasis) -> bool:
    return normal_form(f, gb).is_zero()


def is_trivial_ideal(gb: GroebnerBasis) -> bool:
    """True iff the basis generates the whole ring (contains a unit)."""
    return any(
        not g.is_zero() and g.total_degree() == 0 for g in gb.generators
    )


def radical_member(
    var: str,
    gens: list[Poly],
    order: TermOrder | None = None,
    max_pairs: int = DEFAULT_PAIR_BUDGET,
) -> bool:
    """Decide whether some power of var lies in the ideal of gens."""
    if var.startswith("~"):
        raise ValueError("variable names starting with '~' are reserved")
    saturated = list(gens) + [
        Poly.const(1) - Poly.var(SATURATION_VAR) * Poly.var(var)
    ]
    if order is not None:
        order = order.extend((SATURATION_VAR,))
    gb = buchberger(saturated, order, max_pairs=max_pairs)
    return is_trivial_ideal(gb)
