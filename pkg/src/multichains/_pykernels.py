"""Pure-Python kernels; same signatures as the compiled ``_kernels`` module."""
import numpy as np


def relation_matrix(entries, leq, split, componentwise):
    """Evaluate a multichain relation on all ordered pairs.

    ``entries`` is an ``N x r`` array of element indices, one multichain per
    row.  For position ``t`` with ``componentwise[t]`` set, the clause is
    ``p_t >= q_t``; otherwise ``p_t >= q_s`` for ``s < split[t]`` and
    ``p_t <= q_s`` for ``s >= split[t]`` (0-based ``s``).
    """
    rows = np.asarray(entries).tolist()
    le = np.asarray(leq, dtype=bool).tolist()
    split = list(np.asarray(split).tolist())
    comp = [bool(x) for x in np.asarray(componentwise).tolist()]
    N = len(rows)
    r = len(split)
    out = np.zeros((N, N), dtype=np.uint8)
    for a in range(N):
        p = rows[a]
        for b in range(N):
            q = rows[b]
            ok = True
            for t in range(r):
                pt = p[t]
                if comp[t]:
                    if not le[q[t]][pt]:
                        ok = False
                        break
                    continue
                st = split[t]
                for s in range(r):
                    if s < st:
                        if not le[q[s]][pt]:
                            ok = False
                            break
                    elif not le[pt][q[s]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out[a, b] = 1
    return out


def check_axioms(mat):
    """Brute-force (reflexive, antisymmetric, transitive) of a relation matrix."""
    m = np.asarray(mat, dtype=bool).tolist()
    N = len(m)
    reflexive = all(m[a][a] for a in range(N))
    antisymmetric = True
    for a in range(N):
        for b in range(a + 1, N):
            if m[a][b] and m[b][a]:
                antisymmetric = False
                break
        if not antisymmetric:
            break
    transitive = True
    for a in range(N):
        ma = m[a]
        for b in range(N):
            if not ma[b]:
                continue
            mb = m[b]
            for c in range(N):
                if mb[c] and not ma[c]:
                    transitive = False
                    break
            if not transitive:
                break
        if not transitive:
            break
    return reflexive, antisymmetric, transitive
