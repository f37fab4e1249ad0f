"""Exact-arithmetic geometry of the averaging map from P_r to |Delta(P)|.

A multichain is sent to the barycentre of its entries (with multiplicity),
and this is extended affinely over simplices.  Certificates check, one
maximal chain at a time, that the image simplices tile the chain's simplex.
"""
from __future__ import annotations

import json
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import DEFAULT_MAX_FACES, clique_complex, multichain_complex, multichain_graph
from .homology import is_homology_point
from .poset import Poset, PosetError, maximal_chains
from .relations import IndexMap, is_reflexive_map, rel_leq


@dataclass(frozen=True)
class BarycentricPoint:
    """Point of the simplex on ``chain`` with exact coordinates ``coords``."""

    chain: tuple
    coords: tuple

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != len(self.chain):
            raise ValueError("one coordinate per chain element is required")
        if any(c < 0 for c in coords):
            raise ValueError("barycentric coordinates must be nonnegative")
        if sum(coords) != 1:
            raise ValueError(f"coordinates sum to {sum(coords)}, not 1")

    @property
    def support(self) -> tuple:
        return tuple(p for p, c in zip(self.chain, self.coords) if c > 0)

    def as_dict(self) -> dict:
        return {p: c for p, c in zip(self.chain, self.coords) if c}

    def is_interior(self) -> bool:
        return all(c > 0 for c in self.coords)


def vertex_placement(m) -> BarycentricPoint:
    """Barycentre of the entries of a multichain, with multiplicities."""
    r = len(m)
    counts = Counter(m)
    chain = tuple(sorted(counts))
    return BarycentricPoint(chain, tuple(Fraction(counts[p], r) for p in chain))


def simplex_support(P: Poset, simplex) -> tuple:
    """Union of the entries of a set of multichains, as a chain of ``P``."""
    return P.as_chain(x for m in simplex for x in m)


def image_point(combination) -> dict:
    """Image under the averaging map of ``sum w_j * m_j`` (pairs ``(w, m)``)."""
    out = {}
    for w, m in combination:
        for p, c in vertex_placement(m).as_dict().items():
            out[p] = out.get(p, 0) + Fraction(w) * c
    return {p: c for p, c in out.items() if c}


def exact_determinant(rows) -> Fraction:
    A = [[Fraction(x) for x in row] for row in rows]
    n = len(A)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        pv = A[col][col]
        det *= pv
        for i in range(col + 1, n):
            if A[i][col]:
                f = A[i][col] / pv
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return det


def simplex_volume(points) -> Fraction:
    """Unsigned d-volume of the simplex on ``d + 1`` points of ``Q^d``."""
    d = len(points) - 1
    base = points[0]
    rows = [[a - b for a, b in zip(pt, base)] for pt in points[1:]]
    return abs(exact_determinant(rows)) / math.factorial(d)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# certificates


@dataclass
class FacetCertificate:
    chain: tuple
    labels: tuple
    pieces: int
    total_volume: Fraction
    target_volume: Fraction
    nondegenerate: bool
    pure: bool
    injective: bool
    homology_point: bool
    euler_characteristic: int

    @property
    def volume_ok(self) -> bool:
        return self.nondegenerate and self.pure and self.total_volume == self.target_volume

    @property
    def certified(self) -> bool:
        return self.volume_ok and self.injective and self.homology_point and self.euler_characteristic == 1

    def to_dict(self) -> dict:
        return {
            "chain": list(self.labels),
            "pieces": self.pieces,
            "volume_ok": self.volume_ok,
            "total_volume": _frac_str(self.total_volume),
            "target_volume": _frac_str(self.target_volume),
            "nondegenerate": self.nondegenerate,
            "injective": self.injective,
            "homology_point": self.homology_point,
            "euler_characteristic": self.euler_characteristic,
        }


@dataclass
class DichotomyReport:
    dimension: int
    chain_dimension: int
    facet_sizes: tuple
    dim_excess: bool
    non_pure: bool

    @property
    def holds(self) -> bool:
        return self.dim_excess or self.non_pure

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "chain_dimension": self.chain_dimension,
            "facet_sizes": list(self.facet_sizes),
            "dim_excess": self.dim_excess,
            "non_pure": self.non_pure,
        }


@dataclass
class Certificate:
    iota: IndexMap
    r: int
    kind: str  # "subdivision" or "dichotomy"
    facets: list = field(default_factory=list)
    dichotomies: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        """True iff every maximal chain is certified as subdivided."""
        return self.kind == "subdivision" and all(f.certified for f in self.facets)

    def to_dict(self) -> dict:
        out = {"iota": str(self.iota), "r": self.r, "kind": self.kind, "verdict": self.verdict}
        if self.kind == "subdivision":
            out["facets"] = [f.to_dict() for f in self.facets]
        else:
            out["dichotomy"] = [
                dict(chain=list(lab), **d.to_dict()) for lab, d in self.dichotomies
            ]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _certify_chain(P, K, vertices, chain, r):
    d = len(chain) - 1
    cset = set(chain)
    sub = [i for i, m in enumerate(vertices) if set(m) <= cset]
    KC = K.induced(sub)
    local = [vertices[i] for i in sub]
    # coordinates on the chain, dropping the first element's coordinate
    coords = []
    for m in local:
        pt = vertex_placement(m).as_dict()
        coords.append(tuple(pt.get(p, Fraction(0)) for p in chain[1:]))
    injective = len(set(coords)) == len(coords)
    pieces = [f for f in KC.facets if len(f) == d + 1]
    volumes = [simplex_volume([coords[v] for v in f]) for f in pieces]
    return FacetCertificate(
        chain=tuple(chain),
        labels=tuple(str(P.labels[p]) for p in chain),
        pieces=len(pieces),
        total_volume=sum(volumes, Fraction(0)),
        target_volume=Fraction(1, math.factorial(d)),
        nondegenerate=all(v != 0 for v in volumes),
        pure=len(pieces) == len(KC.facets),
        injective=injective,
        homology_point=is_homology_point(KC),
        euler_characteristic=KC.euler_characteristic(),
    )


def dichotomy_report(P: Poset, r: int, iota: IndexMap, max_faces: int = DEFAULT_MAX_FACES) -> DichotomyReport:
    """Dimension excess / non-purity of the complex for a non-reflexive map on a chain."""
    if len(P) < 2 or not P.is_chain(tuple(range(len(P)))):
        raise PosetError("dichotomy report needs a chain with at least two elements")
    iota = iota.normalized()
    if is_reflexive_map(iota):
        raise ValueError(f"index map {iota} is reflexive")
    K = multichain_complex(P, r, iota, max_faces)
    sizes = tuple(sorted({len(f) for f in K.facets}))
    return DichotomyReport(
        dimension=K.dimension(),
        chain_dimension=len(P) - 1,
        facet_sizes=sizes,
        dim_excess=K.dimension() > len(P) - 1,
        non_pure=len(sizes) > 1,
    )


def subdivision_certificate(P: Poset, r: int, iota: IndexMap, max_faces: int = DEFAULT_MAX_FACES) -> Certificate:
    """Certify that the clique complex subdivides the order complex of ``P``.

    For a reflexive map each maximal chain is checked by exact volumes,
    nondegeneracy, injectivity on vertices and vanishing reduced homology.
    Otherwise the per-chain dichotomy report is returned.
    """
    if iota.r != r:
        raise ValueError(f"index map {iota} is not defined for r = {r}")
    iota = iota.normalized()
    if is_reflexive_map(iota) or P.is_antichain():
        G = multichain_graph(P, r, iota)
        K = clique_complex(G, max_faces)
        cert = Certificate(iota, r, "subdivision")
        for ch in maximal_chains(P):
            cert.facets.append(_certify_chain(P, K, G.vertices, ch, r))
        return cert
    cert = Certificate(iota, r, "dichotomy")
    for ch in maximal_chains(P):
        if len(ch) >= 2:
            sub = P.subposet(ch)
            cert.dichotomies.append(
                (tuple(str(P.labels[p]) for p in ch), dichotomy_report(sub, r, iota, max_faces)))
    return cert


# ---------------------------------------------------------------------------
# preimages of interior points


@dataclass
class PreimageTableau:
    """Columns ``q_1, ..., q_m`` with weights ``alpha_j - alpha_{j-1}``."""

    alphas: tuple
    grid: tuple  # r rows of m entries

    @property
    def m(self) -> int:
        return len(self.alphas)

    @property
    def columns(self) -> list:
        return [tuple(row[j] for row in self.grid) for j in range(self.m)]

    @property
    def weights(self) -> tuple:
        prev = (Fraction(0),) + self.alphas[:-1]
        return tuple(a - b for a, b in zip(self.alphas, prev))

    def combination(self) -> list:
        return list(zip(self.weights, self.columns))


def _cumulative(z: BarycentricPoint, r: int):
    acc = Fraction(0)
    out = []
    for lam in z.coords:
        acc += lam
        out.append(r * acc)
    return out


def preimage_alphas(z: BarycentricPoint, iota: IndexMap) -> list:
    """The values alpha(1), ..., alpha(n), one per chain element."""
    r = iota.r
    out = []
    for S in _cumulative(z, r):
        i = math.ceil(S)  # i - 1 < S <= i
        if iota(i) == 2 * i - 1:
            out.append(S - (i - 1))
        elif S < i:
            out.append(i - S)
        else:
            out.append(Fraction(1))
    return out


def preimage(z: BarycentricPoint, iota: IndexMap):
    """Tableau and point of the clique complex mapped onto an interior point ``z``.

    Returns ``(tableau, combination)`` where ``combination`` is a list of
    ``(weight, multichain)`` pairs with positive weights summing to 1.
    """
    iota = iota.normalized()
    if not is_reflexive_map(iota):
        raise ValueError(f"index map {iota} is not reflexive")
    if not z.is_interior():
        raise ValueError("preimage needs a point with strictly positive coordinates")
    r = iota.r
    S = _cumulative(z, r)
    alphas = tuple(sorted(set(preimage_alphas(z, iota))))
    grid = []
    for i in range(1, r + 1):
        row = []
        for a in alphas:
            if iota(i) == 2 * i - 1:
                k = next(k for k, s in enumerate(S) if s >= i - 1 + a)
            else:
                k = next(k for k, s in enumerate(S) if i - s < a)
            row.append(z.chain[k])
        grid.append(tuple(row))
    tab = PreimageTableau(alphas, tuple(grid))
    return tab, tab.combination()


def tableau_is_valid(P: Poset, tab: PreimageTableau, iota: IndexMap) -> bool:
    """Columns are distinct multichains forming a strict chain, rows are monotone."""
    iota = iota.normalized()
    cols = tab.columns
    if tab.alphas[-1] != 1 or any(a >= b for a, b in zip(tab.alphas, tab.alphas[1:])):
        return False
    if any(not all(P.le(a, b) for a, b in zip(c, c[1:])) for c in cols):
        return False
    if len(set(cols)) != len(cols):
        return False
    if not all(rel_leq(P, iota, a, b) for a, b in zip(cols, cols[1:])):
        return False
    for i, row in enumerate(tab.grid, 1):
        pairs = list(zip(row, row[1:]))
        if iota(i) == 2 * i - 1:
            if not all(P.le(a, b) for a, b in pairs):
                return False
        elif not all(P.le(b, a) for a, b in pairs):
            return False
    return True


def random_interior_point(chain, rng: random.Random, max_weight: int = 50) -> BarycentricPoint:
    w = [rng.randint(1, max_weight) for _ in chain]
    total = sum(w)
    return BarycentricPoint(tuple(chain), tuple(Fraction(x, total) for x in w))
