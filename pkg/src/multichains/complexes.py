"""Simplicial complexes, multichain graphs and their clique complexes."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .poset import Poset, PosetError
from .relations import (
    IndexMap,
    Relation,
    enumerate_multichains,
    enumerate_script_I,
    multichain_label,
)

DEFAULT_MAX_FACES = 10**5


class ComplexSizeError(RuntimeError):
    """Raised when face expansion would exceed its size guard."""


class SimplicialComplex:
    """A vertex-labelled complex stored by its facets.

    ``facets`` may be any iterable of vertex-index collections; non-maximal
    and duplicate entries are dropped, and facets are kept as sorted tuples
    in lexicographic order.
    """

    def __init__(self, vertices: Sequence[str], facets, max_faces: int = DEFAULT_MAX_FACES):
        self.vertices = list(vertices)
        self.max_faces = max_faces
        n = len(self.vertices)
        cand = set()
        for f in facets:
            f = tuple(sorted(set(f)))
            if not f:
                raise ValueError("empty facet")
            if f[0] < 0 or f[-1] >= n:
                raise ValueError(f"facet {f} refers to a missing vertex")
            cand.add(f)
        by_size = sorted(cand, key=len, reverse=True)
        kept = []
        kept_sets = []
        for f in by_size:
            s = set(f)
            if not any(s < k for k in kept_sets if len(k) > len(s)):
                kept.append(f)
                kept_sets.append(s)
        self.facets = sorted(kept)
        self._faces = None

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    # -- faces ----------------------------------------------------------------

    def faces(self) -> list:
        """All nonempty faces, sorted by dimension then lexicographically."""
        if self._faces is None:
            bound = sum(2 ** len(f) - 1 for f in self.facets)
            if bound > self.max_faces:
                # the bound overcounts shared faces; count exactly before refusing
                seen = set()
                for f in self.facets:
                    for k in range(1, len(f) + 1):
                        seen.update(itertools.combinations(f, k))
                        if len(seen) > self.max_faces:
                            raise ComplexSizeError(
                                f"complex has more than {self.max_faces} faces")
                faces = seen
            else:
                faces = set()
                for f in self.facets:
                    for k in range(1, len(f) + 1):
                        faces.update(itertools.combinations(f, k))
            self._faces = sorted(faces, key=lambda s: (len(s), s))
        return self._faces

    def faces_of_dim(self, k: int) -> list:
        return [f for f in self.faces() if len(f) == k + 1]

    def used_vertices(self) -> list:
        return sorted({v for f in self.facets for v in f})

    # -- statistics -------------------------------------------------------------

    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def f_vector(self) -> tuple:
        counts = [0] * (self.dimension() + 1)
        for f in self.faces():
            counts[len(f) - 1] += 1
        return tuple(counts)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * n for i, n in enumerate(self.f_vector()))

    # -- derived complexes --------------------------------------------------------

    def induced(self, vertex_subset) -> "SimplicialComplex":
        """Induced subcomplex, re-indexed onto ``vertex_subset`` (sorted)."""
        keep = sorted(set(vertex_subset))
        pos = {v: i for i, v in enumerate(keep)}
        facets = []
        for f in self.facets:
            g = [pos[v] for v in f if v in pos]
            if g:
                facets.append(g)
        return SimplicialComplex([self.vertices[v] for v in keep], facets, self.max_faces)

    def relabel(self, perm) -> "SimplicialComplex":
        """Complex with vertex ``v`` moved to position ``perm[v]``."""
        verts = [None] * len(self.vertices)
        for v, lab in enumerate(self.vertices):
            verts[perm[v]] = lab
        return SimplicialComplex(verts, [[perm[v] for v in f] for f in self.facets], self.max_faces)

    def label_facets(self) -> set:
        return {frozenset(self.vertices[v] for v in f) for f in self.facets}

    # -- export ---------------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        return cls(data["vertices"], data["facets"])


def f_vector(K: SimplicialComplex) -> tuple:
    return K.f_vector()


def dimension(K: SimplicialComplex) -> int:
    return K.dimension()


def is_pure(K: SimplicialComplex) -> bool:
    return K.is_pure()


def euler_characteristic(K: SimplicialComplex) -> int:
    return K.euler_characteristic()


def same_up_to_relabeling(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    """Equality of facet sets after matching vertices by label."""
    return (sorted(K1.vertices) == sorted(K2.vertices)
            and K1.label_facets() == K2.label_facets())


# -----------------------------------------------------------------------------
# graphs


@dataclass
class MultichainGraph:
    """Comparability graph of a relation on P_r.  Vertex ``i`` is ``vertices[i]``."""

    poset: Poset
    relation: Relation
    vertices: list
    adjacency: np.ndarray

    @property
    def labels(self) -> list:
        return [multichain_label(self.poset, m) for m in self.vertices]

    @property
    def edges(self) -> set:
        a, b = np.nonzero(np.triu(self.adjacency, 1))
        return set(zip(a.tolist(), b.tolist()))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i, j])

    def to_dimacs(self) -> str:
        """DIMACS edge list; vertex numbers are 1-based as in the format."""
        edges = sorted(self.edges)
        lines = [f"p edge {len(self.vertices)} {len(edges)}"]
        lines += [f"e {i + 1} {j + 1}" for i, j in edges]
        return "\n".join(lines) + "\n"


def multichain_graph(P: Poset, r: int, relation) -> MultichainGraph:
    """Graph on P_r with an edge for every related pair of distinct multichains.

    ``relation`` is a ``Relation`` or an ``IndexMap`` (meaning the plain
    iota relation).
    """
    if isinstance(relation, IndexMap):
        relation = Relation("iota", relation)
    if relation.r != r:
        raise ValueError(f"relation is defined for r = {relation.r}, not {r}")
    chains = enumerate_multichains(P, r)
    mat = relation.matrix(P, chains)
    adj = mat | mat.T
    np.fill_diagonal(adj, False)
    return MultichainGraph(P, relation, chains, adj)


def graphs_equal(G1: MultichainGraph, G2: MultichainGraph) -> bool:
    if G1.vertices != G2.vertices:
        raise ValueError("graphs live on different vertex sets")
    return bool(np.array_equal(G1.adjacency, G2.adjacency))


def count_distinct_graphs(P: Poset, r: int) -> int:
    """Number of distinct graphs G_iota(P_r) over the reflexive maps with iota(1) = 1."""
    seen = set()
    for iota in enumerate_script_I(r):
        G = multichain_graph(P, r, iota)
        seen.add(G.adjacency.tobytes())
    return len(seen)


def edge_in_all_graphs(P: Poset, r: int, p, q) -> bool:
    """Closed form: p and q differ in exactly one position, at comparable entries."""
    p, q = tuple(p), tuple(q)
    if len(p) != r or len(q) != r:
        raise ValueError("multichains must have length r")
    if p == q:
        raise ValueError("edge query needs two distinct multichains")
    diff = [k for k in range(r) if p[k] != q[k]]
    return len(diff) == 1 and P.comparable(p[diff[0]], q[diff[0]])


def edge_in_all_graphs_bruteforce(P: Poset, r: int, p, q) -> bool:
    p, q = tuple(p), tuple(q)
    if p == q:
        raise ValueError("edge query needs two distinct multichains")
    for iota in enumerate_script_I(r):
        rel = Relation("iota", iota)
        if not (rel.holds(P, p, q) or rel.holds(P, q, p)):
            return False
    return True


# -----------------------------------------------------------------------------
# cliques


def maximal_cliques(adjacency) -> list:
    """Bron-Kerbosch with Tomita pivoting; deterministic sorted output."""
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    nbrs = [frozenset(np.nonzero(adj[v])[0].tolist()) for v in range(n)]
    out = []

    def expand(R, Pset, X):
        if not Pset and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(sorted(Pset | X), key=lambda u: len(Pset & nbrs[u]))
        for v in sorted(Pset - nbrs[pivot]):
            expand(R + [v], Pset & nbrs[v], X & nbrs[v])
            Pset = Pset - {v}
            X = X | {v}

    expand([], frozenset(range(n)), frozenset())
    return sorted(out)


def clique_complex(G: MultichainGraph, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    facets = maximal_cliques(G.adjacency) if len(G.vertices) else []
    return SimplicialComplex(G.labels, facets, max_faces)


def multichain_complex(P: Poset, r: int, relation, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """Clique complex of ``multichain_graph(P, r, relation)``."""
    return clique_complex(multichain_graph(P, r, relation), max_faces)


# -----------------------------------------------------------------------------
# edgewise subdivision (Freudenthal / Kuhn description)


def _kuhn_simplices(d: int, r: int):
    """Top simplices of the r-th edgewise subdivision of a d-simplex.

    Points are partial-sum vectors ``0 <= u_0 <= ... <= u_{d-1} <= r``; a
    simplex is a Kuhn simplex ``w, w + e_pi(1), ..., w + 1`` of the unit-cube
    grid lying inside that region.
    """
    if d == 0:
        yield ((),)
        return

    def inside(u):
        return u[0] >= 0 and u[-1] <= r and all(a <= b for a, b in zip(u, u[1:]))

    for w in itertools.product(range(r), repeat=d):
        for perm in itertools.permutations(range(d)):
            pts = [tuple(w)]
            cur = list(w)
            for axis in perm:
                cur[axis] += 1
                pts.append(tuple(cur))
            if all(inside(u) for u in pts):
                yield tuple(pts)


def _partial_sums_to_multichain(u, chain, r):
    bounds = (0,) + tuple(u) + (r,)
    counts = [b - a for a, b in zip(bounds, bounds[1:])]
    out = []
    for v, c in zip(chain, counts):
        out.extend([v] * c)
    return tuple(out)


def edgewise_subdivision(K: SimplicialComplex, r: int, order: Poset | None = None) -> SimplicialComplex:
    """The r-th edgewise subdivision of a complex whose facets are chains.

    Within each facet the vertex-index order is taken as the chain order.
    When ``order`` is given (vertex ``i`` of ``K`` being element ``i``),
    every facet is checked to be a chain of it.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if order is not None:
        for f in K.facets:
            if not order.is_chain(f):
                raise PosetError(f"facet {[K.vertices[v] for v in f]} is not a chain")
    keys = {}
    facets = []
    for f in K.facets:
        d = len(f) - 1
        for simplex in _kuhn_simplices(d, r):
            idx = []
            for u in simplex:
                m = _partial_sums_to_multichain(u, f, r)
                idx.append(keys.setdefault(m, len(keys)))
            facets.append(idx)
    ordered = sorted(keys)
    pos = {m: i for i, m in enumerate(ordered)}
    renum = {keys[m]: pos[m] for m in ordered}

    def label(m):
        labs = [str(K.vertices[v]) for v in m]
        return "".join(labs) if all(len(s) == 1 for s in labs) else "(" + ",".join(labs) + ")"

    return SimplicialComplex([label(m) for m in ordered],
                             [[renum[i] for i in f] for f in facets], K.max_faces)


def clique_supports_are_chains(P: Poset, G: MultichainGraph, K: SimplicialComplex) -> bool:
    """Every facet's multichains together use only pairwise comparable elements."""
    for f in K.facets:
        elems = sorted({x for v in f for x in G.vertices[v]})
        if not P.is_chain(elems):
            return False
    return True
