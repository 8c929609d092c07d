"""Labeled path diagrams on the complete multigraph over {1..m}.

Entries of a word-block matrix expand as sums over paths: the (i,t)
entry of block ell is the sum, over all vertex sequences from i to t of
the right length, of the product of the edge variables traversed.  This
module provides that expansion as an independent oracle, plus a brute
force verifier for the partial-order property of minor indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceededError
from .multiset import Multiset
from .plucker import MinorIndex
from .polyring import Poly, edge_var
from .words import WordSystem, decode_column

DEFAULT_COLLECTION_BUDGET = 10**6


@dataclass(frozen=True)
class Path:
    """A word label and a vertex sequence of length ||word|| + 1."""

    label: int  # 1-based index into the word system
    vertices: tuple[int, ...]

    @property
    def initial(self) -> int:
        return self.vertices[0]

    @property
    def terminal(self) -> int:
        return self.vertices[-1]

    def edges(self, ws: WordSystem) -> list[tuple[int, int, int]]:
        word = ws.words[self.label - 1]
        if len(self.vertices) != len(word) + 1:
            raise ValueError("vertex count does not match word length")
        return [
            (self.vertices[k], self.vertices[k + 1], word.letters[k])
            for k in range(len(word))
        ]

    def edge_multiset(self, ws: WordSystem) -> Multiset:
        return Multiset(dict_from_pairs(self.edges(ws)))


def dict_from_pairs(items) -> dict:
    counts: dict = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    return counts


@dataclass(frozen=True)
class PathCollection:
    """A multiset of paths, stored as sorted (path, count) pairs."""

    paths: tuple[tuple[Path, int], ...]

    @classmethod
    def from_paths(cls, paths) -> "PathCollection":
        counts = dict_from_pairs(paths)
        return cls(tuple(sorted(counts.items(), key=lambda kv: _path_key(kv[0]))))

    def row_multiset(self) -> Multiset:
        return Multiset(
            dict_from_pairs_weighted((p.initial, k) for p, k in self.paths)
        )

    def column_multiset(self, ws: WordSystem) -> Multiset:
        return Multiset(
            dict_from_pairs_weighted((_column(p, ws), k) for p, k in self.paths)
        )

    def edge_multiset(self, ws: WordSystem) -> Multiset:
        total = Multiset()
        for p, k in self.paths:
            total = total + p.edge_multiset(ws).scale(k)
        return total

    def minor_index(self, ws: WordSystem) -> MinorIndex | None:
        """d(P) when both the row and column multisets are sets."""
        rows = self.row_multiset()
        cols = self.column_multiset(ws)
        if not (rows.is_set() and cols.is_set()):
            return None
        return MinorIndex(tuple(sorted(rows.support())), tuple(sorted(cols.support())))


def _column(p: Path, ws: WordSystem) -> int:
    return (p.label - 1) * ws.m + p.terminal


def dict_from_pairs_weighted(items) -> dict:
    counts: dict = {}
    for x, k in items:
        counts[x] = counts.get(x, 0) + k
    return counts


def _path_key(p: Path):
    return (p.label, p.vertices)


def enumerate_paths(
    ws: WordSystem,
    label: int,
    initial: int | None = None,
    terminal: int | None = None,
) -> list[Path]:
    """All paths with the given label, optionally pinning endpoints."""
    if not 1 <= label <= ws.n:
        raise ValueError("label out of range")
    length = len(ws.words[label - 1])
    firsts = [initial] if initial is not None else list(range(1, ws.m + 1))
    lasts = [terminal] if terminal is not None else list(range(1, ws.m + 1))
    out = []
    for v0 in firsts:
        for vend in lasts:
            if length == 1:
                out.append(Path(label, (v0, vend)))
                continue
            for mid in product(range(1, ws.m + 1), repeat=length - 1):
                out.append(Path(label, (v0,) + mid + (vend,)))
    return out


def path_sum_entry(ws: WordSystem, i: int, t: int, label: int) -> Poly:
    """Sum over paths from i to t with the given label of the edge products."""
    if not (1 <= i <= ws.m and 1 <= t <= ws.m):
        raise ValueError("vertex out of range")
    acc = Poly.zero()
    for p in enumerate_paths(ws, label, i, t):
        term = Poly.const(1)
        for a, b, q in p.edges(ws):
            term = term * Poly.var(edge_var(a, b, q))
        acc = acc + term
    return acc


def _decode_minor_columns(ws: WordSystem, d: MinorIndex) -> list[tuple[int, int]]:
    out = []
    for j in d.J:
        if not 1 <= j <= ws.m * ws.n:
            raise ValueError(f"column {j} out of range")
        out.append(decode_column(j, ws.m))
    return out


def f_value(ws: WordSystem, d: MinorIndex) -> int:
    """Sum over rows i with a matching column of the shortest word length.

    Columns decode as (t, ell); row i matches column (t, ell) when t = i.
    """
    cols = _decode_minor_columns(ws, d)
    total = 0
    for i in d.I:
        lengths = [len(ws.words[ell - 1]) for t, ell in cols if t == i]
        if lengths:
            total += min(lengths)
    return total


def lemma_witness(ws: WordSystem, d: MinorIndex) -> PathCollection:
    """The canonical path collection realizing d: loop at i, then step out.

    Rows with a matching column take their shortest matching word; the
    remaining rows and columns are matched up in sorted order.
    """
    cols = _decode_minor_columns(ws, d)
    assignment: dict[int, tuple[int, int]] = {}
    used = [False] * len(cols)
    for i in d.I:
        best = None
        for idx, (t, ell) in enumerate(cols):
            if used[idx] or t != i:
                continue
            if best is None or len(ws.words[ell - 1]) < len(ws.words[cols[best][1] - 1]):
                best = idx
        if best is not None:
            used[best] = True
            assignment[i] = cols[best]
    free_rows = [i for i in d.I if i not in assignment]
    free_cols = [cols[idx] for idx in range(len(cols)) if not used[idx]]
    for i, tc in zip(free_rows, free_cols):
        assignment[i] = tc
    paths = []
    for i in d.I:
        t, ell = assignment[i]
        length = len(ws.words[ell - 1])
        paths.append(Path(ell, (i,) * length + (t,)))
    return PathCollection.from_paths(paths)


def _collections_with_edge_multiset(ws: WordSystem, target: Multiset, budget: int):
    """Yield every path multiset whose total edge multiset equals target."""
    candidates = []
    for label in range(1, ws.n + 1):
        for p in enumerate_paths(ws, label):
            if p.edge_multiset(ws) <= target:
                candidates.append(p)
    candidates.sort(key=_path_key)
    visited = 0

    def extend(start: int, remaining: Multiset, chosen: list[Path]):
        nonlocal visited
        if not remaining:
            visited += 1
            if visited > budget:
                raise BudgetExceededError("path collection enumeration budget hit")
            yield PathCollection.from_paths(list(chosen))
            return
        for idx in range(start, len(candidates)):
            fp = candidates[idx].edge_multiset(ws)
            if fp <= remaining:
                chosen.append(candidates[idx])
                # Allow repeats of the same path: restart at idx.
                yield from extend(idx, remaining - fp, chosen)
                chosen.pop()

    yield from extend(0, target, [])


def verify_lemma(
    ws: WordSystem,
    d: MinorIndex,
    budget: int = DEFAULT_COLLECTION_BUDGET,
) -> bool:
    """Brute-force check of the partial-order property at d.

    Builds the canonical witness collection, then enumerates every other
    collection with the same edge multiset whose minor index is valid,
    and checks that each one sits strictly lower in the order.
    """
    witness = lemma_witness(ws, d)
    if witness.minor_index(ws) != d:
        return False
    target = witness.edge_multiset(ws)
    fd = f_value(ws, d)
    for coll in _collections_with_edge_multiset(ws, target, budget):
        if coll == witness:
            continue
        d_prime = coll.minor_index(ws)
        if d_prime is None:
            continue
        if not f_value(ws, d_prime) < fd:
            return False
    return True
