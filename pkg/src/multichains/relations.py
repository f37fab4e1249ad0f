"""Multichains, index maps and the relations defined on r-multichains.

A multichain is a plain tuple of element indices ``(p_1, ..., p_r)`` with
``p_1 <= ... <= p_r`` in the poset.  Because posets are indexed along a
linear extension, a multichain is also non-decreasing as an index tuple.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .poset import Poset

DEFAULT_MAX_TRIPLES = 10**8


class OracleSizeError(RuntimeError):
    """Raised when a brute-force check would exceed its size guard."""


# --------------------------------------------------------------------------
# multichains


def enumerate_multichains(P: Poset, r: int) -> list:
    """All r-multichains of ``P`` in lexicographic index order."""
    if r < 1:
        raise ValueError("r must be at least 1")
    out = []
    for tup in itertools.combinations_with_replacement(range(len(P)), r):
        if all(P.le(a, b) for a, b in zip(tup, tup[1:])):
            out.append(tup)
    return out


def is_multichain(P: Poset, m: Sequence[int]) -> bool:
    return all(P.le(a, b) for a, b in zip(m, m[1:]))


def multichain_label(P: Poset, m: Sequence[int]) -> str:
    labels = [str(P.labels[i]) for i in m]
    if all(len(s) == 1 for s in labels):
        return "".join(labels)
    return "(" + ",".join(labels) + ")"


def parse_multichain(P: Poset, text: str) -> tuple:
    text = text.strip()
    if text.startswith("("):
        toks = [t.strip() for t in text.strip("()").split(",")]
    else:
        toks = list(text)
    by_name = {str(lab): i for i, lab in enumerate(P.labels)}
    try:
        m = tuple(by_name[t] for t in toks)
    except KeyError as exc:
        raise ValueError(f"unknown element {exc.args[0]!r} in {text!r}") from None
    if not is_multichain(P, m):
        raise ValueError(f"{text!r} is not a multichain")
    return m


# --------------------------------------------------------------------------
# index maps


def _runs(values, r):
    """Run lengths of image / complement over positions 1..2r."""
    image = set(values)
    runs = []
    for pos in range(1, 2 * r + 1):
        inside = pos in image
        if runs and runs[-1][0] == inside:
            runs[-1][1] += 1
        else:
            runs.append([inside, 1])
    return runs


@dataclass(frozen=True)
class IndexMap:
    """A strictly increasing map ``[r] -> [2r]``, stored 1-based."""

    values: tuple
    _runs: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        r = len(vals)
        if r < 1:
            raise ValueError("an index map needs r >= 1")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"index map {vals} is not strictly increasing")
        if vals[0] < 1 or vals[-1] > 2 * r:
            raise ValueError(f"index map {vals} leaves [1, {2 * r}]")
        object.__setattr__(self, "_runs", tuple(map(tuple, _runs(vals, r))))

    @classmethod
    def parse(cls, text: str) -> "IndexMap":
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    def __str__(self):
        return ",".join(map(str, self.values))

    def __call__(self, t: int) -> int:
        return self.values[t - 1]

    def __len__(self):
        return len(self.values)

    @property
    def r(self) -> int:
        return len(self.values)

    @property
    def split(self) -> tuple:
        """``iota(t) - t``: the number of q-entries that must lie below p_t."""
        return tuple(v - t for t, v in enumerate(self.values, 1))

    def dual(self) -> "IndexMap":
        img = set(self.values)
        return IndexMap(tuple(j for j in range(1, 2 * self.r + 1) if j not in img))

    def normalized(self) -> "IndexMap":
        """The map itself if it sends 1 to 1, otherwise its dual."""
        return self if self.values[0] == 1 else self.dual()

    @property
    def b(self) -> tuple:
        """Block sizes of the image."""
        return tuple(n for inside, n in self._runs if inside)

    @property
    def c(self) -> tuple:
        """Block sizes of the complement."""
        return tuple(n for inside, n in self._runs if not inside)

    @property
    def ell(self) -> int:
        return len(self.b)

    @property
    def ell_prime(self) -> int:
        return len(self.c)

    def block_of(self, t: int) -> int:
        """0-based index of the image block containing ``iota(t)``."""
        acc = 0
        for i, size in enumerate(self.b):
            acc += size
            if t <= acc:
                return i
        raise IndexError(t)


def dual_map(iota: IndexMap) -> IndexMap:
    return iota.dual()


def all_index_maps(r: int) -> list:
    return [IndexMap(c) for c in itertools.combinations(range(1, 2 * r + 1), r)]


def enumerate_script_I(r: int) -> list:
    """The ``2**(r-1)`` maps with iota(1) = 1 and iota(t) in {2t-1, 2t}."""
    if r < 1:
        raise ValueError("r must be at least 1")
    choices = [(1,)] + [(2 * t - 1, 2 * t) for t in range(2, r + 1)]
    return [IndexMap(v) for v in itertools.product(*choices)]


def zigzag_map(r: int) -> IndexMap:
    return IndexMap(tuple(2 * t if t % 2 == 0 else 2 * t - 1 for t in range(1, r + 1)))


def parse_kappa(text: str) -> tuple:
    kappa = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    if any(k not in (0, 1) for k in kappa):
        raise ValueError(f"kappa entries must be 0 or 1, got {text!r}")
    return kappa


# --------------------------------------------------------------------------
# classification predicates


def is_reflexive_map(iota: IndexMap) -> bool:
    iota = iota.normalized()
    return all(v in (2 * t - 1, 2 * t) for t, v in enumerate(iota.values, 1))


def block_partial_sums(iota: IndexMap):
    """Partial sums of b and c for a map with iota(1) = 1.

    The complement list is padded with a trailing 0 when ``2r`` lies in the
    image, so both lists have length ``ell``.
    """
    if iota.values[0] != 1:
        raise ValueError("block partial sums need iota(1) = 1")
    b, c = list(iota.b), list(iota.c)
    if len(c) == len(b) - 1:
        c.append(0)
    return list(itertools.accumulate(b)), list(itertools.accumulate(c))


def is_transitive_map(iota: IndexMap) -> bool:
    """Block condition: B1 < C1 < B2 < ... < C_{l-1} <= B_l <= C_l."""
    B, C = block_partial_sums(iota.normalized())
    seq = [x for pair in zip(B, C) for x in pair]
    ell = len(B)
    for k in range(len(seq) - 1):
        if k <= 2 * ell - 4:
            if not seq[k] < seq[k + 1]:
                return False
        elif not seq[k] <= seq[k + 1]:
            return False
    return True


def is_partial_order_map(iota: IndexMap) -> bool:
    iota = iota.normalized()
    return all(v == (2 * t if t % 2 == 0 else 2 * t - 1) for t, v in enumerate(iota.values, 1))


# --------------------------------------------------------------------------
# relations on pairs


def _check_pair(iota_r, p, q):
    if len(p) != iota_r or len(q) != iota_r:
        raise ValueError(f"multichains of length {len(p)}, {len(q)} do not match r = {iota_r}")


def rel_leq(P: Poset, iota: IndexMap, p, q) -> bool:
    """``p`` below ``q``: p_t >= q_s for s <= iota(t) - t, p_t <= q_s otherwise."""
    r = iota.r
    _check_pair(r, p, q)
    for t in range(1, r + 1):
        cut = iota(t) - t
        pt = p[t - 1]
        for s in range(1, r + 1):
            qs = q[s - 1]
            if s <= cut:
                if not P.le(qs, pt):
                    return False
            elif not P.le(pt, qs):
                return False
    return True


def interleaved_sequence(iota: IndexMap, p, q) -> list:
    """Merge p and q block by block into one sequence of length 2r."""
    out = []
    ip = iq = 0
    for inside, size in iota._runs:
        if inside:
            out.extend(p[ip:ip + size])
            ip += size
        else:
            out.extend(q[iq:iq + size])
            iq += size
    return out


def rel_leq_interleaved(P: Poset, iota: IndexMap, p, q) -> bool:
    """Same relation, tested as: the interleaved sequence is a multichain."""
    _check_pair(iota.r, p, q)
    seq = interleaved_sequence(iota, p, q)
    return all(P.le(a, b) for a, b in zip(seq, seq[1:]))


def rel_leq_prime(P: Poset, iota: IndexMap, p, q) -> bool:
    _check_pair(iota.r, p, q)
    return tuple(p) == tuple(q) or rel_leq(P, iota, p, q)


def rel_muhle(P: Poset, p, q) -> bool:
    if len(p) != len(q):
        raise ValueError("multichains of different length")
    return all(P.le(a, b) for a, b in zip(p, q))


def rel_general(P: Poset, iota: IndexMap, kappa, p, q) -> bool:
    """Blockwise mix: kappa = 0 blocks use the iota clauses, kappa = 1 blocks
    require p_t >= q_t."""
    kappa = tuple(kappa)
    if len(kappa) != iota.ell:
        raise ValueError(f"kappa has length {len(kappa)}, iota has {iota.ell} blocks")
    r = iota.r
    _check_pair(r, p, q)
    for t in range(1, r + 1):
        pt = p[t - 1]
        if kappa[iota.block_of(t)] == 1:
            if not P.le(q[t - 1], pt):
                return False
            continue
        cut = iota(t) - t
        for s in range(1, r + 1):
            qs = q[s - 1]
            if s <= cut:
                if not P.le(qs, pt):
                    return False
            elif not P.le(pt, qs):
                return False
    return True


# --------------------------------------------------------------------------
# relation descriptors and whole-matrix evaluation

RELATION_KINDS = ("iota", "iota-prime", "muhle", "general")


@dataclass(frozen=True)
class Relation:
    """Which relation on P_r to build.  ``r`` is fixed by ``iota`` when given."""

    kind: str
    iota: IndexMap | None = None
    kappa: tuple | None = None
    r: int | None = None

    def __post_init__(self):
        if self.kind not in RELATION_KINDS:
            raise ValueError(f"unknown relation {self.kind!r}")
        if self.kind != "muhle" and self.iota is None:
            raise ValueError(f"relation {self.kind!r} needs an index map")
        if self.iota is not None:
            if self.r is not None and self.r != self.iota.r:
                raise ValueError(f"r = {self.r} does not match index map {self.iota}")
            object.__setattr__(self, "r", self.iota.r)
        if self.r is None:
            raise ValueError("relation needs r")
        if self.kind == "general":
            if self.kappa is None or len(self.kappa) != self.iota.ell:
                raise ValueError("general relation needs kappa with one entry per block")
            object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))

    def __str__(self):
        if self.kind == "muhle":
            return "muhle"
        if self.kind == "general":
            return f"general[{self.iota};{','.join(map(str, self.kappa))}]"
        return f"{self.kind}[{self.iota}]"

    def holds(self, P: Poset, p, q) -> bool:
        if self.kind == "iota":
            return rel_leq(P, self.iota, p, q)
        if self.kind == "iota-prime":
            return rel_leq_prime(P, self.iota, p, q)
        if self.kind == "muhle":
            return rel_muhle(P, p, q)
        return rel_general(P, self.iota, self.kappa, p, q)

    def _kernel_args(self):
        r = self.r
        if self.kind == "muhle":
            return np.zeros(r, dtype=np.int64), np.ones(r, dtype=np.uint8)
        split = np.array(self.iota.split, dtype=np.int64)
        if self.kind == "general":
            comp = np.array([self.kappa[self.iota.block_of(t)] for t in range(1, r + 1)], dtype=np.uint8)
        else:
            comp = np.zeros(r, dtype=np.uint8)
        return split, comp

    def matrix(self, P: Poset, chains) -> np.ndarray:
        """Boolean matrix ``M[a, b] = chains[a] rel chains[b]``."""
        if not chains:
            return np.zeros((0, 0), dtype=bool)
        entries = np.array(chains, dtype=np.int64).reshape(len(chains), self.r)
        split, comp = self._kernel_args()
        leq = np.ascontiguousarray(P.leq, dtype=np.uint8)
        mat = kernels.relation_matrix(entries, leq, split, comp).astype(bool)
        if self.kind == "muhle":
            mat = np.ascontiguousarray(mat.T)
        elif self.kind == "iota-prime":
            np.fill_diagonal(mat, True)
        return mat


# --------------------------------------------------------------------------
# brute-force axiom oracle


@dataclass(frozen=True)
class AxiomReport:
    reflexive: bool
    antisymmetric: bool
    transitive: bool

    @property
    def partial_order(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive


def oracle_check_axioms(P: Poset, r: int, iota: IndexMap | None = None, *,
                        relation: Relation | None = None,
                        max_triples: int = DEFAULT_MAX_TRIPLES) -> AxiomReport:
    """Check the order axioms of a relation on P_r by exhaustive enumeration."""
    if relation is None:
        if iota is None:
            raise ValueError("need an index map or a relation")
        relation = Relation("iota", iota)
    if relation.r != r:
        raise ValueError(f"relation is defined for r = {relation.r}, not {r}")
    chains = enumerate_multichains(P, r)
    n = len(chains)
    if n ** 3 > max_triples:
        raise OracleSizeError(f"|P_r|^3 = {n ** 3} triples exceeds the guard of {max_triples}")
    mat = relation.matrix(P, chains)
    return AxiomReport(*kernels.check_axioms(mat.astype(np.uint8)))
