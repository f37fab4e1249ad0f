"""Finite posets and their order complexes.

Elements are stored by dense integer index.  At construction the ground set
is re-indexed along a fixed topological sort, so ``i < j`` holds whenever
element ``i`` lies strictly below element ``j``.  Chains are therefore just
sorted index tuples.
"""
from __future__ import annotations

import heapq
from typing import Hashable, Iterable, Sequence

import numpy as np


class PosetError(ValueError):
    pass


class CycleError(PosetError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("cover relations contain a cycle: " + " < ".join(map(str, self.cycle)))


def _find_cycle(n, succ):
    color = [0] * n
    parent = [-1] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == 0:
                    color[w] = 1
                    parent[w] = v
                    stack.append((w, iter(succ[w])))
                    break
                if color[w] == 1:
                    path = [v]
                    while path[-1] != w:
                        path.append(parent[path[-1]])
                    return path[::-1] + [w]
            else:
                color[v] = 2
                stack.pop()
    return None


def _topological_order(leq):
    """Kahn's algorithm on the strict relation; ties broken by index."""
    n = len(leq)
    indeg = [sum(1 for a in range(n) if a != b and leq[a][b]) for b in range(n)]
    heap = [b for b in range(n) if indeg[b] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        a = heapq.heappop(heap)
        order.append(a)
        for b in range(n):
            if b != a and leq[a][b]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    heapq.heappush(heap, b)
    if len(order) != n:
        raise PosetError("relation is not antisymmetric")
    return order


class Poset:
    """An immutable finite poset.

    Parameters
    ----------
    labels : sequence of hashable
        Element labels, distinct.
    leq : n x n boolean array-like
        ``leq[a][b]`` is true iff ``labels[a] <= labels[b]``.

    The relation is checked to be a partial order.  Elements are re-indexed
    in topological order; ``labels`` after construction follows the new order.
    """

    def __init__(self, labels: Sequence[Hashable], leq):
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise PosetError("duplicate element labels")
        mat = np.asarray(leq, dtype=bool)
        n = len(labels)
        if mat.shape != (n, n):
            raise PosetError(f"relation matrix has shape {mat.shape}, expected {(n, n)}")
        if n and not mat.diagonal().all():
            raise PosetError("relation is not reflexive")
        if np.any(mat & mat.T & ~np.eye(n, dtype=bool)):
            raise PosetError("relation is not antisymmetric")
        m = mat.astype(np.int64)
        if np.any(((m @ m) > 0) & ~mat):
            raise PosetError("relation is not transitive")
        order = _topological_order(mat.tolist())
        self.labels = tuple(labels[i] for i in order)
        self.leq = mat[np.ix_(order, order)]
        self.leq.setflags(write=False)
        self._leq_rows = [row for row in self.leq.tolist()]
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    # -- construction ----------------------------------------------------

    @classmethod
    def from_covers(cls, elements: Iterable[Hashable], covers: Iterable[tuple]) -> "Poset":
        """Build the reflexive-transitive closure of a cover digraph."""
        elements = list(elements)
        if len(set(elements)) != len(elements):
            dup = next(e for e in elements if elements.count(e) > 1)
            raise PosetError(f"duplicate element label {dup!r}")
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        succ = [[] for _ in range(n)]
        for a, b in covers:
            if a not in index or b not in index:
                raise PosetError(f"cover ({a!r}, {b!r}) uses an unknown element")
            succ[index[a]].append(index[b])
        cycle = _find_cycle(n, succ)
        if cycle is not None:
            raise CycleError([elements[i] for i in cycle])
        leq = np.eye(n, dtype=bool)
        for i in range(n):
            stack = [i]
            while stack:
                v = stack.pop()
                for w in succ[v]:
                    if not leq[i, w]:
                        leq[i, w] = True
                        stack.append(w)
        return cls(elements, leq)

    @classmethod
    def chain(cls, n: int, labels=None) -> "Poset":
        labels = list(labels) if labels is not None else list(range(1, n + 1))
        return cls.from_covers(labels, zip(labels, labels[1:]))

    @classmethod
    def antichain(cls, n: int, labels=None) -> "Poset":
        labels = list(labels) if labels is not None else [chr(ord("a") + i) for i in range(n)]
        return cls.from_covers(labels, [])

    # -- queries -----------------------------------------------------------

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"Poset({list(self.labels)!r}, covers={self.cover_relations()!r})"

    def index(self, label) -> int:
        return self._index[label]

    def le(self, a: int, b: int) -> bool:
        return self._leq_rows[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self._leq_rows[a][b]

    def comparable(self, a: int, b: int) -> bool:
        return self._leq_rows[a][b] or self._leq_rows[b][a]

    def cover_relations(self):
        n = len(self)
        covers = []
        for a in range(n):
            for b in range(n):
                if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in range(n)):
                    covers.append((self.labels[a], self.labels[b]))
        return covers

    def is_chain(self, elems: Sequence[int]) -> bool:
        """True iff ``elems`` is strictly increasing in the order."""
        return all(self.lt(a, b) for a, b in zip(elems, elems[1:]))

    def is_antichain(self) -> bool:
        return not any(self.lt(a, b) for a in range(len(self)) for b in range(len(self)))

    def as_chain(self, elems: Iterable[int]) -> tuple:
        """Sort a set of pairwise comparable elements into a chain.

        Raises ``PosetError`` if the set is not totally ordered.
        """
        ch = tuple(sorted(set(elems)))
        if not self.is_chain(ch):
            raise PosetError(f"elements {[self.labels[i] for i in ch]} do not form a chain")
        return ch

    def subposet(self, elems: Iterable[int]) -> "Poset":
        elems = sorted(set(elems))
        return Poset([self.labels[i] for i in elems], self.leq[np.ix_(elems, elems)])


def poset_from_cover_relations(elements, covers) -> Poset:
    return Poset.from_covers(elements, covers)


def parse_poset(text: str) -> Poset:
    """Parse the line format ``a < b`` (chains ``a < b < c`` allowed).

    A line holding a single token declares an isolated element.  Blank lines
    and ``#`` comments are ignored.
    """
    elements = []
    seen = set()
    covers = []

    def add(tok):
        if tok not in seen:
            seen.add(tok)
            elements.append(tok)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("<")]
        if any(not p or len(p.split()) != 1 for p in parts):
            raise PosetError(f"line {lineno}: cannot parse {raw!r}")
        for p in parts:
            add(p)
        covers.extend(zip(parts, parts[1:]))
    return Poset.from_covers(elements, covers)


def read_poset(path) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return parse_poset(fh.read())


def format_poset(P: Poset) -> str:
    lines = [f"{a} < {b}" for a, b in P.cover_relations()]
    touched = {x for pair in P.cover_relations() for x in pair}
    lines += [str(lab) for lab in P.labels if lab not in touched]
    return "\n".join(lines) + "\n"


def maximal_chains_of_relation(leq) -> list:
    """Maximal chains of any finite partial order given by its matrix.

    Works on arbitrary index order; every chain is returned sorted bottom-up.
    """
    rows = [list(r) for r in np.asarray(leq, dtype=bool).tolist()]
    n = len(rows)
    up = [[b for b in range(n) if b != a and rows[a][b]] for a in range(n)]
    covers = [[b for b in up[a] if not any(rows[c][b] for c in up[a] if c != b)] for a in range(n)]
    minimal = [a for a in range(n) if not any(rows[b][a] for b in range(n) if b != a)]
    out = []
    for m in minimal:
        stack = [(m,)]
        while stack:
            ch = stack.pop()
            nxt = covers[ch[-1]]
            if not nxt:
                out.append(ch)
            else:
                stack.extend(ch + (b,) for b in reversed(nxt))
    return sorted(out)


def maximal_chains(P: Poset) -> list:
    """All inclusion-maximal chains of ``P``, as sorted index tuples."""
    return maximal_chains_of_relation(P.leq)


def all_chains(P: Poset) -> list:
    """All nonempty chains, i.e. the faces of the order complex."""
    faces = set()
    for ch in maximal_chains(P):
        k = len(ch)
        for mask in range(1, 1 << k):
            faces.add(tuple(ch[i] for i in range(k) if mask >> i & 1))
    return sorted(faces, key=lambda c: (len(c), c))


def longest_chain_length(P: Poset) -> int:
    chains = maximal_chains(P)
    return max((len(c) - 1 for c in chains), default=-1)


def order_complex(P: Poset):
    from .complexes import SimplicialComplex

    return SimplicialComplex([str(lab) for lab in P.labels], maximal_chains(P))
