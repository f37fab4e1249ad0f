"""Reduced integral simplicial homology via Smith normal form.

Everything is done with Python integers, so there is no overflow however
large intermediate entries get.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import SimplicialComplex


class IntegerMatrix:
    """Sparse matrix of Python ints, stored as ``{row: {col: value}}``."""

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.data = {}
        if entries is None:
            return
        if isinstance(entries, dict):
            for i, row in entries.items():
                if not 0 <= i < rows or any(not 0 <= j < cols for j in row):
                    raise ValueError("entry outside the stated shape")
                row = {j: int(x) for j, x in row.items() if x}
                if row:
                    self.data[i] = row
            return
        entries = [list(row) for row in entries]
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError("entry grid does not match the stated shape")
        for i, row in enumerate(entries):
            sp = {j: int(x) for j, x in enumerate(row) if x}
            if sp:
                self.data[i] = sp

    @classmethod
    def _trusted(cls, rows: int, cols: int, data: dict) -> "IntegerMatrix":
        """Wrap an already clean ``{row: {col: nonzero}}`` dict without copying."""
        M = cls(rows, cols)
        M.data = data
        return M

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    def __repr__(self):
        return f"IntegerMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def __eq__(self, other):
        return (isinstance(other, IntegerMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.data.values())

    @property
    def entries(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, row in self.data.items():
            for j, x in row.items():
                out[i][j] = x
        return out

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = {}
        for i, row in self.data.items():
            acc = {}
            for k, x in row.items():
                for j, y in other.data.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + x * y
            acc = {j: x for j, x in acc.items() if x}
            if acc:
                out[i] = acc
        return IntegerMatrix._trusted(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not self.data

    def tolist(self):
        return self.entries


def boundary_matrices(K: SimplicialComplex) -> list:
    """``[d_0, d_1, ..., d_dim]`` with ``d_k`` mapping k-faces to (k-1)-faces.

    ``d_0`` is the augmentation onto a single (-1)-face, so homology computed
    from this list is reduced.  Face ``(v_0 < ... < v_k)`` has boundary
    ``sum_i (-1)^i (face without v_i)``.
    """
    faces = K.faces()
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = K.dimension()
    n0 = len(by_dim.get(0, []))
    mats = [IntegerMatrix._trusted(1, n0, {0: {j: 1 for j in range(n0)}} if n0 else {})]
    for k in range(1, top + 1):
        lower = by_dim.get(k - 1, [])
        upper = by_dim.get(k, [])
        pos = {f: i for i, f in enumerate(lower)}
        data = {}
        for j, f in enumerate(upper):
            for i in range(len(f)):
                data.setdefault(pos[f[:i] + f[i + 1:]], {})[j] = -1 if i % 2 else 1
        mats.append(IntegerMatrix._trusted(len(lower), len(upper), data))
    return mats


def _eliminate_units(rows):
    """Sparse elimination of +-1 pivots.

    ``rows`` maps row id -> {col: value}.  Each unit pivot contributes an
    invariant factor 1 and is removed with its row and column; the rows left
    over are returned.  Pivots come from the sparsest rows first (lazy heap)
    and, within a row, from the sparsest column, to keep fill-in low.
    """
    cols = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)
    heap = [(len(row), i) for i, row in rows.items()]
    heapq.heapify(heap)
    units = 0
    while heap:
        size, i = heapq.heappop(heap)
        row = rows.get(i)
        if row is None or len(row) != size:
            continue
        j = min((j for j, v in row.items() if v == 1 or v == -1),
                key=lambda j: (len(cols[j]), j), default=None)
        if j is None:
            continue
        prow = rows.pop(i)
        pv = prow[j]
        for j2 in prow:
            cols[j2].discard(i)
        for k in list(cols[j]):
            row = rows[k]
            factor = row[j] * pv
            for j2, v in prow.items():
                nv = row.get(j2, 0) - factor * v
                if nv:
                    if j2 not in row:
                        cols[j2].add(k)
                    row[j2] = nv
                elif j2 in row:
                    del row[j2]
                    cols[j2].discard(k)
            if row:
                heapq.heappush(heap, (len(row), k))
            else:
                del rows[k]
        del cols[j]
        units += 1
    return units, rows


def _dense_snf(A, m, n):
    """Invariant factors of a dense block, pivoting on the least |entry|."""
    diag = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        while True:
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                x = A[i][t]
                if x:
                    q = x // piv
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, n):
                            Ai[j] -= q * At[j]
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                x = A[t][j]
                if x:
                    q = x // piv
                    if q:
                        for i in range(t, m):
                            A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the remaining block
                bad = next((i for i in range(t + 1, m)
                            if any(A[i][j] % piv for j in range(t + 1, n))), None)
                if bad is None:
                    break
                At, Ab = A[t], A[bad]
                for j in range(t, n):
                    At[j] += Ab[j]
                continue
            # move the least remaining entry of row/column t onto the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, pi, pj = min(cands)
            if pi != t:
                A[t], A[pi] = A[pi], A[t]
            if pj != t:
                for row in A:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def smith_normal_form(M: IntegerMatrix):
    """Invariant factors and rank of an integer matrix.

    Returns ``(factors, rank)`` where ``factors`` lists the nonzero diagonal
    entries ``d_1 | d_2 | ...`` of the Smith form.  Pivots are always entries
    of least absolute value: unit entries are eliminated sparsely first and
    the block left over is reduced densely.
    """
    rows = {i: dict(row) for i, row in M.data.items()}
    units, rest = _eliminate_units(rows)
    used = sorted({j for row in rest.values() for j in row})
    pos = {j: k for k, j in enumerate(used)}
    dense = []
    for row in rest.values():
        line = [0] * len(used)
        for j, x in row.items():
            line[pos[j]] = x
        dense.append(line)
    diag = [1] * units + _dense_snf(dense, len(dense), len(used))
    return diag, len(diag)


def rational_rank(M: IntegerMatrix) -> int:
    """Rank over the rationals by sparse Gaussian elimination on ``Fraction`` entries.

    Independent of the integer Smith-form route; used to cross-check ranks.
    """
    rows = {i: {j: Fraction(x) for j, x in row.items()} for i, row in M.data.items()}
    cols = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)
    heap = [(len(row), i) for i, row in rows.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        size, i = heapq.heappop(heap)
        row = rows.get(i)
        if row is None or len(row) != size:
            continue
        j = min(row, key=lambda j: (len(cols[j]), j))
        prow = rows.pop(i)
        inv = 1 / prow[j]
        for j2 in prow:
            cols[j2].discard(i)
        for k in list(cols[j]):
            row = rows[k]
            factor = row[j] * inv
            for j2, v in prow.items():
                nv = row.get(j2, 0) - factor * v
                if nv:
                    if j2 not in row:
                        cols[j2].add(k)
                    row[j2] = nv
                elif j2 in row:
                    del row[j2]
                    cols[j2].discard(k)
            if row:
                heapq.heappush(heap, (len(row), k))
            else:
                del rows[k]
        del cols[j]
        rank += 1
    return rank


@dataclass
class HomologyResult:
    """Reduced homology: ``betti[k]`` and ``torsion[k]`` for k = 0..dim."""

    betti: list
    torsion: list = field(default_factory=list)

    def __post_init__(self):
        if not self.torsion:
            self.torsion = [[] for _ in self.betti]

    def is_trivial(self) -> bool:
        return not any(self.betti) and not any(self.torsion)

    def normalized(self):
        """Drop trailing zero dimensions, for comparing complexes of different dimension."""
        b, t = list(self.betti), [list(x) for x in self.torsion]
        while b and b[-1] == 0 and not t[-1]:
            b.pop()
            t.pop()
        return tuple(b), tuple(map(tuple, t))

    def same_groups(self, other: "HomologyResult") -> bool:
        return self.normalized() == other.normalized()

    def to_dict(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(x) for x in self.torsion], "reduced": True}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def reduced_homology(K: SimplicialComplex, rank=None, matrices=None) -> HomologyResult:
    """Reduced integral homology of ``K``.

    ``rank`` may replace the Smith-form rank by another rank function (used
    to cross-check Betti numbers); torsion is then not reported.
    ``matrices`` reuses the output of ``boundary_matrices(K)``.
    """
    mats = boundary_matrices(K) if matrices is None else matrices
    ranks = []
    factors = []
    for M in mats:
        if rank is None:
            d, rk = smith_normal_form(M)
            factors.append([x for x in d if x > 1])
        else:
            rk = rank(M)
            factors.append([])
        ranks.append(rk)
    betti, torsion = [], []
    for k, M in enumerate(mats):
        cycles = M.cols - ranks[k]
        boundaries = ranks[k + 1] if k + 1 < len(mats) else 0
        betti.append(cycles - boundaries)
        torsion.append(sorted(factors[k + 1]) if k + 1 < len(mats) else [])
    return HomologyResult(betti, torsion)


def is_homology_point(K: SimplicialComplex) -> bool:
    return reduced_homology(K).is_trivial()


def is_homology_ball(K: SimplicialComplex, d: int) -> bool:
    return K.is_pure() and K.dimension() == d and is_homology_point(K)
