import random
from fractions import Fraction

import pytest

from nonplanarity_lab.polyring import PolyMatrix, generic_matrix
from nonplanarity_lab.words import (
    Word,
    WordSystem,
    abelianize,
    build_psi,
    column_index,
    decode_column,
    distinct_abelianizations,
    evaluate_word,
    veronese_system,
)


def test_abelianize_examples():
    assert abelianize(Word((1, 2, 1)), 2) == (2, 1)
    assert abelianize(Word((1,)), 2) == (1, 0)
    assert abelianize(Word((2, 2, 2)), 2) == (0, 3)


def test_abelianize_concatenation():
    rng = random.Random(5)
    for _ in range(20):
        r = rng.randint(1, 3)
        w1 = Word(tuple(rng.randint(1, r) for _ in range(rng.randint(1, 4))))
        w2 = Word(tuple(rng.randint(1, r) for _ in range(rng.randint(1, 4))))
        a = abelianize(w1.concat(w2), r)
        b = tuple(
            p + q for p, q in zip(abelianize(w1, r), abelianize(w2, r))
        )
        assert a == b


def test_distinct_abelianizations_examples():
    assert distinct_abelianizations(WordSystem(1, 1, (Word((1,)), Word((1, 1)))))
    assert not distinct_abelianizations(
        WordSystem(2, 2, (Word((1, 2)), Word((2, 1))))
    )
    assert distinct_abelianizations(WordSystem(2, 1, (Word((1,)),)))


def _numeric(m, entries):
    return PolyMatrix([[Fraction(v) for v in row] for row in entries])


def test_evaluate_word_numeric():
    x1 = _numeric(2, [[1, 2], [3, 4]])
    x2 = _numeric(2, [[0, 1], [1, 1]])
    prod = evaluate_word(Word((1, 2)), [x1, x2])
    # X1 X2 = [[2,3],[4,7]]
    assert prod == _numeric(2, [[2, 3], [4, 7]])
    assert evaluate_word(Word((1,)), [x1, x2]) == x1
    lhs = evaluate_word(Word((1, 2, 1)), [x1, x2])
    import nonplanarity_lab.polyring as pr

    rhs = pr.matmul(pr.matmul(x1, x2), x1)
    assert lhs == rhs


def test_build_psi_examples():
    ws = WordSystem(1, 1, (Word((1,)), Word((1, 1))))
    psi = build_psi(ws)
    a = pvar("A[1,1,1]")
    assert psi.entry(0, 0) == a
    assert psi.entry(0, 1) == a * a

    ws2 = WordSystem(2, 1, (Word((1,)),))
    assert build_psi(ws2) == generic_matrix(2, 1)

    ws3 = WordSystem(2, 1, (Word((1,)), Word((1, 1))))
    psi3 = build_psi(ws3)
    expected = (
        pvar("A[1,1,1]") * pvar("A[1,1,1]")
        + pvar("A[1,2,1]") * pvar("A[2,1,1]")
    )
    assert psi3.entry(0, column_index(1, 2, 2) - 1) == expected


def pvar(name):
    from nonplanarity_lab.polyring import Poly

    return Poly.var(name)


def test_build_psi_matches_numeric_substitution():
    rng = random.Random(11)
    for _ in range(8):
        m = rng.randint(1, 3)
        r = rng.randint(1, 2)
        w = Word(tuple(rng.randint(1, r) for _ in range(rng.randint(1, 4))))
        ws = WordSystem(m, r, (w,))
        psi = build_psi(ws)
        vals = {}
        mats = []
        for q in range(1, r + 1):
            grid = [
                [Fraction(rng.randint(-3, 3)) for _ in range(m)] for _ in range(m)
            ]
            mats.append(_numeric(m, grid))
            for i in range(m):
                for t in range(m):
                    vals[f"A[{i+1},{t+1},{q}]"] = grid[i][t]
        direct = evaluate_word(w, mats)
        for i in range(m):
            for t in range(m):
                assert psi.entry(i, t).eval_rational(vals) == direct.entry(
                    i, t
                ).constant_term()


def test_veronese_examples():
    ws = veronese_system(1, 2, 2)
    assert [str(w) for w in ws.words] == ["x1", "x2", "x1^2", "x1*x2", "x2^2"]

    ws2 = veronese_system(1, 3, 1)
    assert [str(w) for w in ws2.words] == ["x1", "x1^2", "x1^3"]

    ws3 = veronese_system(1, 1, 3)
    assert [str(w) for w in ws3.words] == ["x1", "x2", "x3"]


def test_veronese_count_and_distinctness():
    from math import comb

    for m, n, r in [(1, 2, 2), (2, 3, 1), (1, 2, 3), (2, 2, 2)]:
        ws = veronese_system(m, n, r)
        assert ws.n == comb(n + r, r) - 1
        assert distinct_abelianizations(ws)


def test_column_index_roundtrip():
    for m in (1, 2, 3):
        for ell in (1, 2, 3):
            for t in range(1, m + 1):
                j = column_index(t, ell, m)
                assert decode_column(j, m) == (t, ell)


def test_validation():
    with pytest.raises(ValueError):
        Word(())
    with pytest.raises(ValueError):
        WordSystem(2, 1, (Word((2,)),))
