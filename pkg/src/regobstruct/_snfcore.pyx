# cython: language_level=3, boundscheck=False, wraparound=False, overflowcheck=True
"""int64 Smith normal form kernel.

Same pivoting rule as the pure-Python implementation (smallest magnitude,
ties by row then column); raises OverflowError when the working entries
leave the int64 range, at which point the caller falls back to the pure
path.  Results of both paths are bit-identical otherwise.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t I64


def snf_int64(cnp.ndarray[I64, ndim=2] M):
    """Return (U, D, V) int64 arrays with U @ M @ V == D in Smith form."""
    cdef Py_ssize_t m = M.shape[0]
    cdef Py_ssize_t n = M.shape[1]
    cdef cnp.ndarray[I64, ndim=2] A = M.copy()
    cdef cnp.ndarray[I64, ndim=2] U = np.eye(m, dtype=np.int64)
    cdef cnp.ndarray[I64, ndim=2] V = np.eye(n, dtype=np.int64)
    cdef Py_ssize_t t, i, j, pi, pj, offender
    cdef I64 q, best, a, tmp
    cdef bint dirty

    for t in range(min(m, n)):
        if not _find_pivot(A, m, n, t, &pi, &pj):
            break
        _move_pivot(A, U, V, m, n, t, pi, pj)

        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i, t] == 0:
                    continue
                q = _floordiv(A[i, t], A[t, t])
                if q != 0:
                    for j in range(t, n):
                        A[i, j] = A[i, j] - q * A[t, j]
                    for j in range(m):
                        U[i, j] = U[i, j] - q * U[t, j]
                if A[i, t] != 0:
                    dirty = True
            if dirty:
                _find_pivot(A, m, n, t, &pi, &pj)
                _move_pivot(A, U, V, m, n, t, pi, pj)
                continue
            dirty = False
            for j in range(t + 1, n):
                if A[t, j] == 0:
                    continue
                q = _floordiv(A[t, j], A[t, t])
                if q != 0:
                    for i in range(m):
                        A[i, j] = A[i, j] - q * A[i, t]
                    for i in range(n):
                        V[i, j] = V[i, j] - q * V[i, t]
                if A[t, j] != 0:
                    dirty = True
            if not dirty:
                offender = -1
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i, j] % A[t, t] != 0:
                            offender = i
                            break
                    if offender >= 0:
                        break
                if offender < 0:
                    break
                for j in range(t, n):
                    A[t, j] = A[t, j] + A[offender, j]
                for j in range(m):
                    U[t, j] = U[t, j] + U[offender, j]
            _find_pivot(A, m, n, t, &pi, &pj)
            _move_pivot(A, U, V, m, n, t, pi, pj)

        if A[t, t] < 0:
            for j in range(t, n):
                A[t, j] = -A[t, j]
            for j in range(m):
                U[t, j] = -U[t, j]

    return U, A, V


cdef inline I64 _floordiv(I64 a, I64 b):
    cdef I64 q = a // b
    return q


cdef bint _find_pivot(cnp.ndarray[I64, ndim=2] A, Py_ssize_t m, Py_ssize_t n,
                      Py_ssize_t t, Py_ssize_t *pi, Py_ssize_t *pj):
    cdef I64 best = 0
    cdef I64 a
    cdef Py_ssize_t i, j
    cdef bint found = False
    for i in range(t, m):
        for j in range(t, n):
            a = A[i, j]
            if a != 0:
                if a < 0:
                    a = -a
                if not found or a < best:
                    best = a
                    pi[0] = i
                    pj[0] = j
                    found = True
                    if best == 1:
                        return True
    return found


cdef void _move_pivot(cnp.ndarray[I64, ndim=2] A, cnp.ndarray[I64, ndim=2] U,
                      cnp.ndarray[I64, ndim=2] V, Py_ssize_t m, Py_ssize_t n,
                      Py_ssize_t t, Py_ssize_t pi, Py_ssize_t pj):
    cdef Py_ssize_t j
    cdef I64 tmp
    if pi != t:
        for j in range(n):
            tmp = A[t, j]; A[t, j] = A[pi, j]; A[pi, j] = tmp
        for j in range(m):
            tmp = U[t, j]; U[t, j] = U[pi, j]; U[pi, j] = tmp
    if pj != t:
        for j in range(m):
            tmp = A[j, t]; A[j, t] = A[j, pj]; A[j, pj] = tmp
        for j in range(n):
            tmp = V[j, t]; V[j, t] = V[j, pj]; V[j, pj] = tmp
