import math
import random
from fractions import Fraction

import pytest

from nonplanarity_lab.exponents import (
    baker_experiment,
    estimate_omega,
    estimate_omega_x,
)

GOLDEN = (1 + math.sqrt(5)) / 2


def test_rational_entries_flag_infinity():
    for est in (
        estimate_omega([[Fraction(1, 2)]], 10),
        estimate_omega_x([[Fraction(1, 2)]], 10),
        estimate_omega([[Fraction(1, 3), Fraction(2, 3)]], 10),
    ):
        assert est.is_infinite
        assert est.value == math.inf
        assert any(est.best_q)


def test_quadratic_irrationals_near_one():
    # omega = 1 exactly for badly approximable numbers; the finite-Q
    # estimate sits slightly above (band checked against continued
    # fraction convergents).
    for alpha in (GOLDEN, math.sqrt(2)):
        est = estimate_omega([[alpha]], 1000)
        assert not est.is_infinite
        assert 0.9 <= est.value <= 1.3


def test_convergent_ratio_is_dominated_for_golden_ratio():
    # 987/610 is a continued-fraction convergent inside the box at
    # Q = 1000, so the scan's maximum must reach its ratio.
    est = estimate_omega([[GOLDEN]], 1000, q_lo=0)
    convergent_ratio = -math.log(abs(610 * GOLDEN - 987)) / math.log(610)
    assert est.value >= convergent_ratio - 1e-12


def test_multiplicative_inequality():
    rng = random.Random(13)
    for _ in range(25):
        m, n = rng.choice([(1, 1), (1, 2), (2, 1), (2, 2)])
        a = [[rng.random() for _ in range(n)] for _ in range(m)]
        for Q in (50,):
            om = estimate_omega(a, Q)
            omx = estimate_omega_x(a, Q)
            if om.is_infinite:
                assert omx.is_infinite
                continue
            assert omx.value >= (m / n) * om.value - 1e-9


def test_full_box_estimate_monotone_in_Q():
    a = [[math.sqrt(2), math.e]]
    prev = -math.inf
    for Q in (10, 40, 160):
        est = estimate_omega(a, Q, q_lo=0)
        assert est.value >= prev - 1e-12
        prev = est.value


def test_determinism():
    a = [[math.pi, math.sqrt(3)]]
    e1 = estimate_omega_x(a, 60)
    e2 = estimate_omega_x(a, 60)
    assert e1 == e2


def test_scan_validation():
    with pytest.raises(ValueError):
        estimate_omega([[0.5]], 1)
    with pytest.raises(ValueError):
        estimate_omega([[0.5]], 10, q_lo=10)


def test_baker_experiment_reproducible():
    r1 = baker_experiment(1, 2, 50, 3, seed=7)
    r2 = baker_experiment(1, 2, 50, 3, seed=7)
    assert r1.estimates == r2.estimates
    assert r1.samples == r2.samples
    r3 = baker_experiment(1, 2, 50, 3, seed=8)
    assert r3.samples != r1.samples


def test_baker_forced_samples_and_summaries():
    rep = baker_experiment(
        1, 2, 20, 2, seed=0, forced_samples=[[[Fraction(1, 2)]]]
    )
    # A rational sample makes the first trial infinite.
    assert rep.estimates[0].is_infinite
    assert rep.num_infinite >= 1
    d = rep.as_dict()
    assert d["trials"] == 2 and len(d["per_trial"]) == 2
    assert d["per_trial"][0]["is_infinite"] is True


def test_estimate_as_dict_roundtrip():
    est = estimate_omega([[GOLDEN]], 50)
    d = est.as_dict()
    assert d["Q"] == 50
    assert d["is_infinite"] is False
    assert d["value"] == est.value
    assert d["best_q"] == list(est.best_q)
