"""Exact linear algebra over prime fields.

The elimination kernel comes from the compiled ``bblab._kernels`` module when
it has been built, otherwise from the numpy implementation in
``bblab._kernels_py``.  Setting ``BBLAB_PURE=1`` forces the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels_py

if os.environ.get("BBLAB_PURE") == "1":
    _kernels = None
else:
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        _kernels = None

BACKEND = "cython" if _kernels is not None else "numpy"
_impl = _kernels if _kernels is not None else _kernels_py

#: Backends available in this interpreter, keyed by name.
BACKENDS = {"numpy": _kernels_py}
if _kernels is not None:
    BACKENDS["cython"] = _kernels

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime 2 <= p < 2**31."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not (2 <= self.p < MAX_PRIME) or not is_prime(int(self.p)):
            raise ValueError(f"characteristic must be a prime in [2, 2^31), got {self.p!r}")
        object.__setattr__(self, "p", int(self.p))

    def __int__(self) -> int:
        return self.p

    def inv(self, a: int) -> int:
        return pow(a % self.p, -1, self.p)


def as_field(field_or_p: PrimeField | int) -> PrimeField:
    if isinstance(field_or_p, PrimeField):
        return field_or_p
    return PrimeField(int(field_or_p))


def reduce_mod(A, p: int) -> np.ndarray:
    return np.mod(np.asarray(A, dtype=np.int64), p)


def rank(A, p: int, backend: str | None = None) -> int:
    """Rank of an integer matrix read modulo ``p``."""
    A = reduce_mod(A, p)
    if A.ndim != 2 or 0 in A.shape:
        return 0
    impl = BACKENDS[backend] if backend else _impl
    return int(impl.rank_mod_p(A, p))


def rref(A, p: int, backend: str | None = None) -> tuple[int, list[int], np.ndarray]:
    """Reduced row echelon form modulo ``p`` as ``(rank, pivot_columns, R)``.

    ``R`` keeps the input shape; rows past ``rank`` are zero.
    """
    A = reduce_mod(A, p)
    if A.ndim != 2 or 0 in A.shape:
        return 0, [], A.reshape(A.shape if A.ndim == 2 else (0, 0))
    impl = BACKENDS[backend] if backend else _impl
    r, piv, R = impl.rref_mod_p(A, p)
    return int(r), list(piv), R


@dataclass
class MatrixFp:
    """A dense matrix over F_p whose rows and columns carry basis labels."""

    data: np.ndarray
    p: int
    rows: Sequence = field(default_factory=tuple)
    cols: Sequence = field(default_factory=tuple)

    def __post_init__(self):
        self.data = reduce_mod(self.data, self.p)
        if self.data.ndim != 2:
            self.data = self.data.reshape(len(self.rows), len(self.cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def rank(self) -> int:
        return rank(self.data, self.p)

    def nullity(self) -> int:
        return self.shape[1] - self.rank()
