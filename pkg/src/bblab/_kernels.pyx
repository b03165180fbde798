# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan elimination over F_p on int64 matrices.

Entries must already be reduced into [0, p) and p < 2**31, so every
product fits in a signed 64-bit word.
"""
import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef Py_ssize_t _eliminate(i64[:, ::1] A, i64 p, bint full, Py_ssize_t[::1] pivots):
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, k, piv, nnz
    cdef i64 inv, f, g, tmp
    cdef Py_ssize_t[::1] nzcols = np.empty(n, dtype=np.intp)
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(c, n):
                tmp = A[r, k]
                A[r, k] = A[piv, k]
                A[piv, k] = tmp
        inv = _inv_mod(A[r, c], p)
        nnz = 0
        for k in range(c, n):
            if A[r, k] != 0:
                A[r, k] = (A[r, k] * inv) % p
                nzcols[nnz] = k
                nnz += 1
        for i in range(0 if full else r + 1, m):
            if i == r:
                continue
            f = A[i, c]
            if f == 0:
                continue
            g = p - f
            for k in range(nnz):
                A[i, nzcols[k]] = (A[i, nzcols[k]] + g * A[r, nzcols[k]]) % p
        pivots[r] = c
        r += 1
    return r


def rank_mod_p(cnp.ndarray A, long long p):
    """Rank of ``A`` over F_p; ``A`` itself is left untouched."""
    cdef i64[:, ::1] view = np.array(A, dtype=np.int64, order="C", copy=True)
    cdef Py_ssize_t[::1] pivots = np.empty(min(view.shape[0], view.shape[1]) + 1, dtype=np.intp)
    return _eliminate(view, p, False, pivots)


def rref_mod_p(cnp.ndarray A, long long p):
    """Reduced row echelon form of a copy; returns ``(rank, pivot_columns, rref)``."""
    arr = np.array(A, dtype=np.int64, order="C", copy=True)
    cdef i64[:, ::1] view = arr
    cdef Py_ssize_t[::1] pivots = np.empty(min(view.shape[0], view.shape[1]) + 1, dtype=np.intp)
    r = _eliminate(view, p, True, pivots)
    return r, [int(pivots[i]) for i in range(r)], arr
