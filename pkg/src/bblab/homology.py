"""Reduced simplicial homology over F_p and the link-based classifiers."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import (
    ComplexError,
    SimplicialComplex,
    euler_characteristic,
    is_pure,
    link,
)
from .linalg import PrimeField, as_field, rank


class NotPureError(ComplexError):
    pass


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers ``(β_{-1}, β_0, ..., β_{d-1})`` over F_p."""

    entries: tuple[int, ...]
    p: int

    def beta(self, i: int) -> int:
        """``β_i``, zero outside the stored range."""
        k = i + 1
        return self.entries[k] if 0 <= k < len(self.entries) else 0

    @property
    def top(self) -> int:
        return len(self.entries) - 2

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def boundary_matrix(K: SimplicialComplex, i: int, p: int) -> np.ndarray:
    """Matrix of ``∂_i : C_i -> C_{i-1}`` (rows: (i-1)-faces, columns: i-faces).

    ``∂_0`` is the augmentation onto the empty face.
    """
    rows = K.faces(i - 1)
    cols = K.faces(i)
    A = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if not rows or not cols:
        return A
    index = {F: r for r, F in enumerate(rows)}
    neg = p - 1
    for c, F in enumerate(cols):
        for k in range(len(F)):
            A[index[F[:k] + F[k + 1:]], c] = 1 if k % 2 == 0 else neg
    return A


def reduced_betti(K: SimplicialComplex, field: PrimeField | int) -> BettiVector:
    """``β_i = dim C_i - rank ∂_i - rank ∂_{i+1}`` on the augmented chain complex."""
    p = as_field(field).p
    top = K.dim
    ranks = {i: rank(boundary_matrix(K, i, p), p) for i in range(0, top + 1)}
    ranks[-1] = 0
    ranks[top + 1] = 0
    betti = tuple(len(K.faces(i)) - ranks[i] - ranks[i + 1] for i in range(-1, top + 1))
    return BettiVector(betti, p)


def is_connected(K: SimplicialComplex, field: PrimeField | int = 2) -> bool:
    b = reduced_betti(K, field)
    return b.beta(-1) == 0 and b.beta(0) == 0


def sphere_betti(dim: int) -> tuple[int, ...]:
    """Reduced Betti vector ``(β_{-1}, ..., β_dim)`` of ``S^dim`` (``S^{-1} = {∅}``)."""
    return tuple(1 if i == dim else 0 for i in range(-1, dim + 1))


def _links_vanish_below_top(K: SimplicialComplex, p: int, with_empty: bool) -> bool:
    """``H̃_i(lk F) = 0`` for ``i < d - |F| - 1`` over all faces ``F`` (optionally ∅)."""
    d = K.d
    facets = set(K.facets)
    for size, level in enumerate(K.faces_by_size):
        if size == 0 and not with_empty:
            continue
        bound = d - size - 1
        if bound <= -1:
            continue
        for F in level:
            if bound == 0:
                # only β_{-1} is constrained: F must not be a facet
                if F in facets:
                    return False
                continue
            b = reduced_betti(link(K, F), p)
            if any(b.beta(i) for i in range(-1, bound)):
                return False
    return True


def is_cohen_macaulay(K: SimplicialComplex, field: PrimeField | int) -> bool:
    """Reisner's criterion, the empty face included."""
    return _links_vanish_below_top(K, as_field(field).p, with_empty=True)


def is_buchsbaum(K: SimplicialComplex, field: PrimeField | int) -> bool:
    """Pure with Cohen-Macaulay vertex links (Schenzel's criterion).

    A face of a vertex link is a link of a larger face of ``K``, so this is
    checked as the Reisner condition over all nonempty faces.
    """
    if K.facets == ((),):
        return True
    return is_pure(K) and _links_vanish_below_top(K, as_field(field).p, with_empty=False)


def is_homology_manifold(K: SimplicialComplex, field: PrimeField | int) -> bool:
    """Every nonempty face link is an F_p-homology sphere of dimension ``d - |F| - 1``."""
    if not is_pure(K):
        raise NotPureError("homology manifold test needs a pure complex")
    p = as_field(field).p
    d = K.d
    for size, level in enumerate(K.faces_by_size):
        if size == 0:
            continue
        target = sphere_betti(d - size - 1)
        for F in level:
            if size == d:
                continue  # link is {∅} = S^{-1}
            if reduced_betti(link(K, F), p).entries != target:
                return False
    return True


def is_semi_eulerian(K: SimplicialComplex) -> bool:
    """Pure, and ``χ(lk F) = χ(S^{d-|F|-1})`` for every nonempty face ``F``."""
    if not is_pure(K):
        return False
    d = K.d
    for size, level in enumerate(K.faces_by_size):
        if size == 0:
            continue
        want = 1 + (-1) ** (d - size - 1)
        for F in level:
            if euler_characteristic(link(K, F)) != want:
                return False
    return True


def is_orientable_over(K: SimplicialComplex, field: PrimeField | int) -> bool:
    """Connected with ``β_{d-1} = 1`` over F_p.

    For a connected closed F_p-homology manifold this is exactly
    F_p-orientability.
    """
    b = reduced_betti(K, field)
    return b.beta(-1) == 0 and b.beta(0) == 0 and b.beta(K.dim) == 1
