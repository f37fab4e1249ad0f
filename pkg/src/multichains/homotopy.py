"""Closure operators and poset maps relating Delta(P_r) to Delta(P).

The checks here are exhaustive over concrete finite inputs: closure axioms,
monotonicity of the support map, homology of fibers, and an explicit order
isomorphism between the closure image and a zig-zag multichain poset.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .complexes import SimplicialComplex
from .homology import is_homology_point
from .poset import Poset, PosetError, maximal_chains_of_relation
from .relations import (
    IndexMap,
    Relation,
    block_partial_sums,
    enumerate_multichains,
    is_transitive_map,
    multichain_label,
    zigzag_map,
)


class FiniteOrder:
    """A partial order on a list of multichains, checked at construction."""

    def __init__(self, poset: Poset, carrier, leq):
        self.poset = poset
        self.carrier = [tuple(m) for m in carrier]
        self.leq = np.asarray(leq, dtype=bool)
        n = len(self.carrier)
        if self.leq.shape != (n, n):
            raise ValueError("relation matrix does not match carrier")
        refl, anti, trans = kernels.check_axioms(self.leq.astype(np.uint8))
        if not (refl and anti and trans):
            raise PosetError(
                f"not a partial order (reflexive={refl}, antisymmetric={anti}, transitive={trans})")
        self.index = {m: i for i, m in enumerate(self.carrier)}

    @classmethod
    def from_relation(cls, P: Poset, relation: Relation, carrier=None):
        if carrier is None:
            carrier = enumerate_multichains(P, relation.r)
        carrier = list(carrier)
        return cls(P, carrier, relation.matrix(P, carrier))

    def __len__(self):
        return len(self.carrier)

    def le(self, a, b) -> bool:
        return bool(self.leq[self.index[tuple(a)], self.index[tuple(b)]])

    def labels(self):
        return [multichain_label(self.poset, m) for m in self.carrier]

    def restrict(self, subset) -> "FiniteOrder":
        idx = [self.index[tuple(m)] for m in subset]
        return FiniteOrder(self.poset, [self.carrier[i] for i in idx], self.leq[np.ix_(idx, idx)])

    def order_complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.labels(), maximal_chains_of_relation(self.leq))


def prime_order(P: Poset, r: int, iota: IndexMap) -> FiniteOrder:
    """P_r under the reflexive closure of the iota relation."""
    if iota.r != r:
        raise ValueError(f"index map {iota} is not defined for r = {r}")
    return FiniteOrder.from_relation(P, Relation("iota-prime", iota))


def muhle_order(P: Poset, r: int) -> FiniteOrder:
    """P_r under componentwise comparison."""
    return FiniteOrder.from_relation(P, Relation("muhle", r=r))


def supported_in(P: Poset, r: int, chain) -> list:
    cset = set(chain)
    return [m for m in enumerate_multichains(P, r) if set(m) <= cset]


# ---------------------------------------------------------------------------
# closure operators


@dataclass
class ClosureReport:
    extensive: bool
    idempotent: bool
    monotone: bool
    image: list = field(default_factory=list)

    @property
    def is_closure(self) -> bool:
        return self.extensive and self.idempotent and self.monotone

    def to_dict(self, poset: Poset | None = None) -> dict:
        img = [multichain_label(poset, m) for m in self.image] if poset else [list(m) for m in self.image]
        return {"extensive": self.extensive, "idempotent": self.idempotent,
                "monotone": self.monotone, "image": img}


def check_closure(operator, order: FiniteOrder) -> ClosureReport:
    """Exhaustively test the closure axioms."""
    vals = {}
    for m in order.carrier:
        v = tuple(operator(m))
        if v not in order.index:
            raise ValueError(f"operator leaves the carrier: {m} -> {v}")
        vals[m] = v
    extensive = all(order.le(m, vals[m]) for m in order.carrier)
    idempotent = all(vals[vals[m]] == vals[m] for m in order.carrier)
    monotone = all(order.le(vals[a], vals[b])
                   for a in order.carrier for b in order.carrier if order.le(a, b))
    image = sorted({v for m, v in vals.items() if vals[v] == v})
    return ClosureReport(extensive, idempotent, monotone, image)


def closure_runs(iota: IndexMap) -> list:
    """Runs ``(start, end, source)`` (1-based, inclusive) describing the closure.

    Positions ``start..end`` of ``cl(p)`` all hold ``p_source``.  With block
    partial sums B_t, C_t the runs are ``(C_{t-1}, B_t]`` with source ``B_t``
    and ``(B_t, C_t]`` with source ``B_t + 1``; empty runs are dropped.
    """
    if iota.values[0] != 1:
        raise ValueError("the closure is defined for maps with iota(1) = 1")
    if not is_transitive_map(iota):
        raise ValueError(f"index map {iota} violates the block condition")
    B, C = block_partial_sums(iota)
    runs = []
    prev_c = 0
    for t, (bt, ct) in enumerate(zip(B, C), 1):
        m_len, k_len = bt - prev_c, ct - bt
        if m_len < 0 or k_len < 0:
            raise ValueError(f"negative run length at block {t} for {iota}: {m_len}, {k_len}")
        if m_len:
            runs.append((prev_c + 1, bt, bt))
        if k_len:
            runs.append((bt + 1, ct, bt + 1))
        prev_c = ct
    return runs


def closure_cl(p, iota: IndexMap) -> tuple:
    """Closure of a multichain under the reflexive-closed iota order."""
    runs = closure_runs(iota)
    if len(p) != iota.r:
        raise ValueError("multichain length does not match r")
    out = []
    for start, end, src in runs:
        out.extend([p[src - 1]] * (end - start + 1))
    return tuple(out)


def muhle_closure(p) -> tuple:
    """Constant multichain at the top entry."""
    return (p[-1],) * len(p)


# ---------------------------------------------------------------------------
# support map and fibers


def support_map_g(P: Poset, simplex) -> tuple:
    """Union of the entries of a chain of multichains, as a chain of ``P``."""
    return P.as_chain(x for m in simplex for x in m)


def support_map_is_monotone(order: FiniteOrder) -> bool:
    """Check the support map on every face and every codimension-one inclusion."""
    K = order.order_complex()
    P = order.poset
    supports = {}
    for f in K.faces():
        try:
            supports[f] = set(support_map_g(P, [order.carrier[v] for v in f]))
        except PosetError:
            return False
    for f in K.faces():
        for i in range(len(f)):
            g = f[:i] + f[i + 1:]
            if g and not supports[g] <= supports[f]:
                return False
    return True


def fiber_complex(P: Poset, r: int, iota: IndexMap, target_chain) -> SimplicialComplex:
    """Order complex of the multichains supported in ``target_chain``."""
    target = P.as_chain(target_chain)
    if not is_transitive_map(iota):
        raise ValueError(f"index map {iota} violates the block condition")
    order = prime_order(P, r, iota).restrict(supported_in(P, r, target))
    return order.order_complex()


# ---------------------------------------------------------------------------
# the reduced zig-zag order and the explicit isomorphism


def reduced_length(iota: IndexMap) -> int:
    """``2*ell - 2`` if C_{ell-1} = B_ell, else ``2*ell - 1``."""
    B, C = block_partial_sums(iota)
    ell = len(B)
    c_prev = C[ell - 2] if ell >= 2 else 0
    return 2 * ell - 2 if c_prev == B[-1] else 2 * ell - 1


def q_zero_order(P: Poset, iota: IndexMap, target_chain):
    """``(r0, iota0, Q0)`` with Q0 the target's r0-multichains under zig-zag."""
    target = P.as_chain(target_chain)
    closure_runs(iota)  # validates iota
    r0 = reduced_length(iota)
    iota0 = zigzag_map(r0)
    carrier = supported_in(P, r0, target)
    order = FiniteOrder.from_relation(P, Relation("iota", iota0), carrier)
    return r0, iota0, order


def compress(p, iota: IndexMap) -> tuple:
    """The map h: read one representative entry per closure run."""
    return tuple(p[start - 1] for start, _, _ in closure_runs(iota))


def expand(x, iota: IndexMap) -> tuple:
    """The inverse map h': spread run representatives over their positions."""
    runs = closure_runs(iota)
    if len(x) != len(runs):
        raise ValueError(f"expected {len(runs)} entries, got {len(x)}")
    out = []
    for val, (start, end, _) in zip(x, runs):
        out.extend([val] * (end - start + 1))
    return tuple(out)


@dataclass
class IsomorphismWitness:
    bijection: dict  # closure-image multichain -> reduced multichain
    bijective: bool
    forward_monotone: bool
    backward_monotone: bool

    @property
    def is_isomorphism(self) -> bool:
        return self.bijective and self.forward_monotone and self.backward_monotone

    def to_dict(self, source: list, target: list) -> dict:
        si = {m: i for i, m in enumerate(source)}
        ti = {m: i for i, m in enumerate(target)}
        return {"bijection": [[si[a], ti[b]] for a, b in sorted(self.bijection.items())],
                "bijective": self.bijective, "forward_monotone": self.forward_monotone,
                "backward_monotone": self.backward_monotone}


def closure_image_isomorphism(P: Poset, r: int, iota: IndexMap, target_chain):
    """Check that the closure image of the fiber is order-isomorphic to Q0.

    Returns ``(witness, closure_image_order, q0_order)``.
    """
    target = P.as_chain(target_chain)
    Q = prime_order(P, r, iota).restrict(supported_in(P, r, target))
    image = sorted({closure_cl(m, iota) for m in Q.carrier})
    clQ = Q.restrict(image)
    _, _, Q0 = q_zero_order(P, iota, target)
    h = {m: compress(m, iota) for m in image}
    bijective = (len(set(h.values())) == len(h) and set(h.values()) == set(Q0.carrier)
                 and all(expand(h[m], iota) == m for m in image))
    forward = all(Q0.le(h[a], h[b]) for a in image for b in image if clQ.le(a, b))
    backward = all(clQ.le(expand(x, iota), expand(y, iota))
                   for x in Q0.carrier for y in Q0.carrier if Q0.le(x, y)) if bijective else False
    return IsomorphismWitness(h, bijective, forward, backward), clQ, Q0


def muhle_image_isomorphic(P: Poset, r: int) -> bool:
    """The constant multichains under componentwise order form a copy of P."""
    order = muhle_order(P, r)
    image = sorted({muhle_closure(m) for m in order.carrier})
    if sorted(image) != sorted((p,) * r for p in range(len(P))):
        return False
    return all(order.le((a,) * r, (b,) * r) == P.le(a, b)
               for a in range(len(P)) for b in range(len(P)))

