import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nonplanarity_lab.multiset import Multiset
from nonplanarity_lab.polyring import (
    Poly,
    PolyMatrix,
    coefficient,
    edge_var,
    generic_matrix,
    matmul,
    poly_add,
    poly_mul,
    sym_det,
)

x = Poly.var("x")
y = Poly.var("y")


def test_generic_matrix():
    g = generic_matrix(1, 1)
    assert g.entry(0, 0) == Poly.var("A[1,1,1]")
    g2 = generic_matrix(2, 2)
    for i in (1, 2):
        for t in (1, 2):
            assert g2.entry(i - 1, t - 1) == Poly.var(edge_var(i, t, 2))
    with pytest.raises(ValueError):
        generic_matrix(0, 1)


def test_arithmetic_examples():
    assert poly_add(x + 1, x - 1) == 2 * x
    assert poly_mul(x + y, x - y) == x**2 - y**2
    prod = matmul(PolyMatrix([[x]]), PolyMatrix([[y]]))
    assert prod.entry(0, 0) == x * y


def test_matmul_dimension_mismatch():
    with pytest.raises(ValueError):
        matmul(PolyMatrix([[x, y]]), PolyMatrix([[x, y]]))


def test_sym_det_examples():
    a, b, c, d = (Poly.var(v) for v in "abcd")
    assert sym_det(PolyMatrix([[a, b], [c, d]])) == a * d - b * c
    assert sym_det(PolyMatrix([[a, b], [a, b]])).is_zero()
    assert sym_det(PolyMatrix([[x]])) == x


def test_sym_det_non_square_and_bound():
    with pytest.raises(ValueError):
        sym_det(PolyMatrix([[x, y]]))
    big = PolyMatrix.identity(3)
    with pytest.raises(ValueError):
        sym_det(big, size_bound=2)


def test_coefficient_examples():
    p = x**2 + 3 * x * y
    assert coefficient(p, Multiset({"x": 1, "y": 1})) == 3
    assert coefficient(x**2, Multiset({"y": 1})) == 0
    assert coefficient(Poly.const(5), Multiset()) == 5


def test_det_multiplicative():
    rng = random.Random(3)
    for size in (2, 3):
        names_p = [[f"p{i}{j}" for j in range(size)] for i in range(size)]
        names_q = [[f"q{i}{j}" for j in range(size)] for i in range(size)]
        p = PolyMatrix([[Poly.var(n) for n in row] for row in names_p])
        q = PolyMatrix([[Poly.var(n) for n in row] for row in names_q])
        assert sym_det(matmul(p, q)) == poly_mul(sym_det(p), sym_det(q))
        # also at a random rational specialization
        vals = {
            n: Fraction(rng.randint(-4, 4))
            for row in names_p + names_q
            for n in row
        }
        lhs = sym_det(matmul(p, q)).eval_rational(vals)
        rhs = (sym_det(p) * sym_det(q)).eval_rational(vals)
        assert lhs == rhs


def test_rank_one_det_vanishes():
    u = [Poly.var(f"u{i}") for i in range(3)]
    v = [Poly.var(f"v{j}") for j in range(3)]
    outer = PolyMatrix([[u[i] * v[j] for j in range(3)] for i in range(3)])
    assert sym_det(outer).is_zero()
    assert sym_det(outer.submatrix([0, 1], [1, 2])).is_zero()


def test_serialization():
    p = 3 * Poly.var("A[1,2,1]") ** 2 * Poly.var("A[2,1,1]") - Fraction(1, 2)
    assert str(p) == "3*A[1,2,1]^2*A[2,1,1] - 1/2"
    assert str(Poly.zero()) == "0"


coef = st.integers(min_value=-4, max_value=4).map(Fraction)
mono = st.dictionaries(
    st.sampled_from("xyz"), st.integers(min_value=1, max_value=3), max_size=3
).map(Multiset)
polys = st.dictionaries(mono, coef, max_size=4).map(Poly)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_additive_inverse(p):
    assert (p - p).is_zero()
    assert p + Poly.zero() == p
    assert p * Poly.const(1) == p
