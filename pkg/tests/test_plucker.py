import random
from fractions import Fraction

import pytest

from nonplanarity_lab.plucker import (
    MinorIndex,
    PluckerVector,
    coefficient_matrix,
    enumerate_D,
    minor_count,
    plucker_embed,
)
from nonplanarity_lab.polyring import Poly, PolyMatrix


def test_minor_count_examples():
    assert minor_count(1, 2) == 2
    assert minor_count(2, 2) == 5
    assert minor_count(2, 4) == 14
    assert minor_count(2, 6) == 27
    assert minor_count(3, 6) == 83


def test_enumerate_D_order_and_count():
    for m, w in [(1, 3), (2, 4), (3, 3)]:
        D = enumerate_D(m, w)
        assert len(D) == minor_count(m, w)
        assert len(set(D)) == len(D)
        sizes = [d.size for d in D]
        assert sizes == sorted(sizes)
    assert enumerate_D(2, 2)[:4] == [
        MinorIndex((1,), (1,)),
        MinorIndex((1,), (2,)),
        MinorIndex((2,), (1,)),
        MinorIndex((2,), (2,)),
    ]
    assert enumerate_D(2, 2)[-1] == MinorIndex((1, 2), (1, 2))


def test_minor_index_validation():
    with pytest.raises(ValueError):
        MinorIndex((1, 2), (1,))
    with pytest.raises(ValueError):
        MinorIndex((2, 1), (1, 2))
    with pytest.raises(ValueError):
        MinorIndex((), ())


def _det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(len(rows)):
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * _det(sub)
    return total


def test_embed_matches_numeric_determinants():
    rng = random.Random(7)
    for m, w in [(2, 3), (3, 4)]:
        grid = [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(w)]
            for _ in range(m)
        ]
        b = PolyMatrix([[Poly.const(v) for v in row] for row in grid])
        plk = plucker_embed(b)
        for d, coord in zip(enumerate_D(m, w), plk.coords):
            sub = [[grid[i - 1][j - 1] for j in d.J] for i in d.I]
            assert coord.constant_term() == _det(sub)


def test_coefficient_matrix_reconstructs_coordinates():
    from nonplanarity_lab.words import Word, WordSystem, build_psi

    b = build_psi(WordSystem(2, 1, (Word((1,)), Word((1, 1)))))
    plk = plucker_embed(b)
    mat, monos = coefficient_matrix(plk)
    assert mat.rows == len(monos)
    assert mat.cols == minor_count(2, 4)
    rows = mat.to_rows()
    for j, coord in enumerate(plk.coords):
        rebuilt = Poly.zero()
        for i, mono in enumerate(monos):
            if rows[i][j]:
                rebuilt = rebuilt + Poly({mono: rows[i][j]})
        assert rebuilt == coord


def test_coefficient_matrix_rejects_constant_terms():
    plk = plucker_embed(PolyMatrix([[Poly.const(1)]]))
    with pytest.raises(ValueError):
        coefficient_matrix(plk)


def test_plucker_vector_length_checked():
    with pytest.raises(ValueError):
        PluckerVector(2, 2, (Poly.var("x"),))
