import random
from fractions import Fraction

import pytest

from nonplanarity_lab.multiset import Multiset
from nonplanarity_lab.polyring import Poly
from nonplanarity_lab.errors import BudgetExceededError
from nonplanarity_lab.groebner import (
    GroebnerBasis,
    TermOrder,
    buchberger,
    ideal_member,
    is_trivial_ideal,
    normal_form,
    radical_member,
)

x = Poly.var("x")
y = Poly.var("y")


def test_buchberger_examples():
    gb = buchberger([x**2 - 1])
    assert set(gb.generators) == {x**2 - 1}

    lex = TermOrder("lex", ("x", "y"))
    gb = buchberger([x - y, y - 1], lex)
    assert set(gb.generators) == {x - 1, y - 1}

    gb = buchberger([x * y - 1, y**2 - 1], lex)
    assert set(gb.generators) == {x - y, y**2 - 1}


def test_ideal_member_examples():
    gb = buchberger([x - 1])
    assert ideal_member(x**2 - 1, gb)
    assert not ideal_member(y, buchberger([x]))
    assert ideal_member(Poly.zero(), buchberger([x * y - 1]))


def test_radical_member_examples():
    assert radical_member("x", [x**2])
    assert not radical_member("x", [y])
    assert radical_member("x", [x * y, x - y])


def test_radical_rejects_reserved_names():
    with pytest.raises(ValueError):
        radical_member("~t", [x])


def test_generators_belong_to_basis_ideal():
    gens = [x**2 * y - 1, x * y**2 - x]
    gb = buchberger(gens)
    for g in gens:
        assert ideal_member(g, gb)


def _random_poly(rng, vars_=("x", "y"), terms=3, deg=3):
    p = Poly.zero()
    for _ in range(terms):
        mono = Multiset(
            {v: rng.randint(0, deg) for v in vars_ if rng.random() < 0.7}
        )
        p = p + Poly({mono: Fraction(rng.randint(-5, 5))})
    return p


def test_normal_form_idempotent_on_random_inputs():
    rng = random.Random(17)
    gb = buchberger([x**2 - y, y**2 - 1])
    for _ in range(100):
        f = _random_poly(rng)
        nf = normal_form(f, gb)
        assert normal_form(nf, gb) == nf
        assert ideal_member(f - nf, gb)


def test_radical_agrees_with_direct_power_search():
    rng = random.Random(23)
    for _ in range(30):
        gens = [_random_poly(rng, terms=2, deg=2) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = buchberger(gens)
        for var in ("x", "y"):
            direct = any(
                ideal_member(Poly.var(var) ** k, gb) for k in range(1, 7)
            )
            if direct:
                assert radical_member(var, gens)


def test_trivial_ideal_detection():
    assert is_trivial_ideal(buchberger([x, x - 1]))
    assert not is_trivial_ideal(buchberger([x * y]))
    assert not is_trivial_ideal(GroebnerBasis((), TermOrder(), ()))


def test_pair_budget():
    gens = [x**3 - y, y**3 - x, (x + y) ** 2 - 1]
    with pytest.raises(BudgetExceededError):
        buchberger(gens, max_pairs=1)


def test_normal_form_outside_universe():
    gb = buchberger([x - 1])
    z = Poly.var("z")
    assert normal_form(x * z, gb) == z
