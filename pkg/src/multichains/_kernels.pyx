# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""
import numpy as np

from libc.stdint cimport int64_t, uint8_t


def relation_matrix(entries, leq, split, componentwise):
    cdef const int64_t[:, ::1] E = np.ascontiguousarray(entries, dtype=np.int64)
    cdef const uint8_t[:, ::1] L = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef const int64_t[::1] S = np.ascontiguousarray(split, dtype=np.int64)
    cdef const uint8_t[::1] C = np.ascontiguousarray(componentwise, dtype=np.uint8)
    cdef Py_ssize_t N = E.shape[0]
    cdef Py_ssize_t r = S.shape[0]
    out = np.zeros((N, N), dtype=np.uint8)
    cdef uint8_t[:, ::1] O = out
    cdef Py_ssize_t a, b, t, s
    cdef int64_t pt, st
    cdef bint ok
    if r and E.shape[1] != r:
        raise ValueError("entries and split disagree on r")
    for a in range(N):
        for b in range(N):
            ok = True
            for t in range(r):
                pt = E[a, t]
                if C[t]:
                    if not L[E[b, t], pt]:
                        ok = False
                        break
                    continue
                st = S[t]
                for s in range(r):
                    if s < st:
                        if not L[E[b, s], pt]:
                            ok = False
                            break
                    elif not L[pt, E[b, s]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                O[a, b] = 1
    return out


def check_axioms(mat):
    cdef const uint8_t[:, ::1] M = np.ascontiguousarray(mat, dtype=np.uint8)
    cdef Py_ssize_t N = M.shape[0]
    cdef Py_ssize_t a, b, c
    cdef bint reflexive = True, antisymmetric = True, transitive = True
    for a in range(N):
        if not M[a, a]:
            reflexive = False
            break
    for a in range(N):
        for b in range(a + 1, N):
            if M[a, b] and M[b, a]:
                antisymmetric = False
                break
        if not antisymmetric:
            break
    for a in range(N):
        for b in range(N):
            if not M[a, b]:
                continue
            for c in range(N):
                if M[b, c] and not M[a, c]:
                    transitive = False
                    break
            if not transitive:
                break
        if not transitive:
            break
    return bool(reflexive), bool(antisymmetric), bool(transitive)
