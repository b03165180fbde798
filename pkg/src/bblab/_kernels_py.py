"""Pure numpy elimination over F_p, used when the compiled kernels are absent.

Same contract as the Cython module: int64 input reduced into [0, p), p < 2**31.
"""
from __future__ import annotations

import numpy as np


def _eliminate(A: np.ndarray, p: int, full: bool) -> tuple[int, list[int]]:
    m, n = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv], c:] = A[[piv, r], c:]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        if full:
            rows = np.flatnonzero(A[:, c])
            rows = rows[rows != r]
        else:
            rows = r + 1 + np.flatnonzero(A[r + 1:, c])
        if rows.size:
            cols = c + np.flatnonzero(A[r, c:])
            f = A[rows, c][:, None]
            A[np.ix_(rows, cols)] = (A[np.ix_(rows, cols)] - f * A[r, cols][None, :]) % p
        pivots.append(c)
        r += 1
    return r, pivots


def rank_mod_p(A: np.ndarray, p: int) -> int:
    A = np.array(A, dtype=np.int64, copy=True)
    return _eliminate(A, p, False)[0]


def rref_mod_p(A: np.ndarray, p: int) -> tuple[int, list[int], np.ndarray]:
    A = np.array(A, dtype=np.int64, copy=True)
    r, pivots = _eliminate(A, p, True)
    return r, pivots, A
