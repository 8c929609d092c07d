import pytest
from hypothesis import given
from hypothesis import strategies as st

from nonplanarity_lab.multiset import (
    Multiset,
    cardinality,
    count,
    is_submultiset,
    msum,
    support,
)


def test_count_examples():
    s = Multiset({"a": 2, "b": 1})
    assert count(s, "a") == 2
    assert count(Multiset(), "a") == 0
    assert count(s, "c") == 0


def test_cardinality_examples():
    assert cardinality(Multiset({"a": 2, "b": 1})) == 3
    assert cardinality(Multiset()) == 0
    assert cardinality(Multiset({"a": 5})) == 5


def test_msum_examples():
    s = Multiset({"a": 2})
    assert msum(s, {"a": Multiset({"x": 1})}) == Multiset({"x": 2})

    s = Multiset({"a": 1, "b": 1})
    fam = {"a": Multiset({"x": 1}), "b": Multiset({"x": 1, "y": 1})}
    assert msum(s, fam) == Multiset({"x": 2, "y": 1})

    assert msum(Multiset(), {}) == Multiset()


def test_msum_missing_family_member():
    with pytest.raises(ValueError):
        msum(Multiset({"a": 1}), {})


def test_submultiset_and_support_examples():
    assert is_submultiset(Multiset({"a": 1}), Multiset({"a": 2}))
    assert not is_submultiset(Multiset({"a": 3}), Multiset({"a": 2}))
    assert support(Multiset({"a": 2, "b": 1})) == {"a", "b"}


def test_canonical_text_form():
    assert str(Multiset({"b": 1, "a": 2})) == "{a:2,b:1}"
    assert str(Multiset()) == "{}"


def test_negative_count_rejected():
    with pytest.raises(ValueError):
        Multiset({"a": -1})


small_ms = st.dictionaries(
    st.sampled_from("abcde"), st.integers(min_value=0, max_value=4), max_size=5
).map(Multiset)


@given(small_ms, st.data())
def test_msum_cardinality(s, data):
    fam = {
        i: data.draw(small_ms) for i in s.support()
    }
    total = msum(s, fam)
    assert total.cardinality() == sum(
        s.count(i) * fam[i].cardinality() for i in s.support()
    )


@given(small_ms, small_ms)
def test_mutual_submultiset_is_equality(s, t):
    if s <= t and t <= s:
        assert s == t


@given(small_ms)
def test_support_reinterpretation(s):
    as_set = Multiset({i: 1 for i in s.support()})
    assert (as_set == s) == s.is_set()
