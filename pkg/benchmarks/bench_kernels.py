"""Compare the compiled and pure-Python relation kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

import numpy as np

from multichains import corpus
from multichains import _pykernels
from multichains.poset import Poset
from multichains.relations import Relation, enumerate_multichains, zigzag_map

try:
    from multichains import _kernels
except ImportError:
    _kernels = None

CASES = [("chain3", 4), ("diamond", 4), ("bowtie", 3), ("chain6", 5), ("chain8", 5), ("chain10", 5)]


def get(name):
    if name.startswith("chain") and name not in corpus.CORPUS:
        return Poset.chain(int(name[5:]))
    return corpus.get(name)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'poset':8} {'r':>2} {'|P_r|':>6} {'kernel':14} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, r in CASES:
        P = get(name)
        chains = enumerate_multichains(P, r)
        rel = Relation("iota", zigzag_map(r))
        entries = np.array(chains, dtype=np.int64)
        split, comp = rel._kernel_args()
        leq = np.ascontiguousarray(P.leq, dtype=np.uint8)
        py_t, py_mat = best_of(lambda: _pykernels.relation_matrix(entries, leq, split, comp), args.repeat)
        rows = [("relation_matrix", py_t, None)]
        if _kernels is not None:
            cy_t, cy_mat = best_of(lambda: np.asarray(_kernels.relation_matrix(entries, leq, split, comp)), args.repeat)
            assert np.array_equal(np.asarray(py_mat), cy_mat), "backends disagree"
            rows[0] = ("relation_matrix", py_t, cy_t)
        mat = np.ascontiguousarray(np.asarray(py_mat), dtype=np.uint8)
        py_t, py_ax = best_of(lambda: _pykernels.check_axioms(mat), args.repeat)
        cy_t = None
        if _kernels is not None:
            cy_t, cy_ax = best_of(lambda: _kernels.check_axioms(mat), args.repeat)
            assert tuple(py_ax) == tuple(cy_ax), "backends disagree"
        rows.append(("check_axioms", py_t, cy_t))
        for kernel, pt, ct in rows:
            cy = f"{1e3 * ct:10.3f}" if ct is not None else f"{'-':>10}"
            sp = f"{pt / ct:7.1f}x" if ct else f"{'-':>8}"
            print(f"{name:8} {r:2d} {len(chains):6d} {kernel:14} {1e3 * pt:10.3f} {cy} {sp}")


if __name__ == "__main__":
    main()
