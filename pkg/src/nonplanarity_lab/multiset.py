"""Immutable multisets with nonnegative integer multiplicities.

Used throughout for monomial exponents, edge multisets of labeled paths,
and the row/column multisets attached to path collections.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class Multiset:
    """A finite multiset over hashable, mutually comparable items.

    Only items with count >= 1 are stored.  Instances are immutable and
    hashable, so they can serve as dict keys (e.g. as monomials).
    """

    __slots__ = ("_counts", "_hash")

    def __init__(self, items: Mapping | Iterable = ()):
        counts: dict = {}
        if isinstance(items, Mapping):
            pairs = items.items()
        else:
            pairs = ((x, 1) for x in items)
        for item, k in pairs:
            if not isinstance(k, int) or k < 0:
                raise ValueError("multiplicities must be nonnegative integers")
            if k:
                counts[item] = counts.get(item, 0) + k
        self._counts = counts
        self._hash = None

    # -- basic queries ------------------------------------------------

    def count(self, item) -> int:
        return self._counts.get(item, 0)

    def cardinality(self) -> int:
        return sum(self._counts.values())

    def support(self) -> frozenset:
        return frozenset(self._counts)

    def items(self):
        """(item, count) pairs in canonical (sorted) order."""
        return sorted(self._counts.items())

    def is_set(self) -> bool:
        """True iff every count is exactly 1."""
        return all(k == 1 for k in self._counts.values())

    def __len__(self) -> int:
        return self.cardinality()

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __iter__(self):
        """Iterate over the support in sorted order."""
        return iter(sorted(self._counts))

    def __contains__(self, item) -> bool:
        return item in self._counts

    # -- algebra ------------------------------------------------------

    def __add__(self, other: "Multiset") -> "Multiset":
        if not isinstance(other, Multiset):
            return NotImplemented
        counts = dict(self._counts)
        for item, k in other._counts.items():
            counts[item] = counts.get(item, 0) + k
        return Multiset(counts)

    def scale(self, k: int) -> "Multiset":
        if k < 0:
            raise ValueError("scale factor must be nonnegative")
        return Multiset({item: c * k for item, c in self._counts.items()})

    def __le__(self, other: "Multiset") -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return all(k <= other.count(item) for item, k in self._counts.items())

    def __sub__(self, other: "Multiset") -> "Multiset":
        """Difference; other must be a submultiset of self."""
        if not other <= self:
            raise ValueError("not a submultiset")
        return Multiset(
            {item: k - other.count(item) for item, k in self._counts.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    # -- serialization ------------------------------------------------

    def expanded(self) -> tuple:
        """Items with repetition, sorted; e.g. {a:2,b:1} -> (a, a, b)."""
        out = []
        for item, k in self.items():
            out.extend([item] * k)
        return tuple(out)

    def __str__(self) -> str:
        inner = ",".join(f"{item}:{k}" for item, k in self.items())
        return "{" + inner + "}"

    def __repr__(self) -> str:
        return f"Multiset({dict(self.items())!r})"


EMPTY = Multiset()


def count(s: Multiset, item) -> int:
    return s.count(item)


def cardinality(s: Multiset) -> int:
    return s.cardinality()


def support(s: Multiset) -> frozenset:
    return s.support()


def is_submultiset(s: Multiset, t: Multiset) -> bool:
    return s <= t


def msum(s: Multiset, family: Mapping) -> Multiset:
    """Multiset sum sum_{i in s} family[i], with multiplicity.

    family must provide a Multiset for every item in the support of s.
    """
    counts: dict = {}
    for item, k in s._counts.items():
        try:
            t = family[item]
        except KeyError:
            raise ValueError(f"family has no member for {item!r}") from None
        for j, c in t._counts.items():
            counts[j] = counts.get(j, 0) + k * c
    return Multiset(counts)
