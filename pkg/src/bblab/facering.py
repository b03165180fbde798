"""Graded pieces of k[Δ]/(Θ) over F_p: Hilbert function, socle, kernels of ·ω.

Degree ``j`` of the face ring has the basis of monomials of degree ``j``
supported on faces.  The image ``(Θ)_j`` is row reduced once per degree; the
non-pivot monomials are the standard basis of the quotient and every
monomial has a normal form in that basis, which fixes the matrices of the
multiplication maps ``·x_v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .complex import ComplexError, SimplicialComplex
from .linalg import PrimeField, as_field, rank, rref

DEFAULT_PRIME = 32003
DEFAULT_MAX_TRIES = 64

Monomial = tuple[int, ...]


class LsopNotFoundError(ComplexError):
    def __init__(self, p: int, seed: int, tries: int):
        self.p, self.seed, self.tries = p, seed, tries
        super().__init__(f"no l.s.o.p. found over F_{p} after {tries} tries (seed {seed})")


class UnverifiedLsopError(ComplexError):
    pass


def _compositions(total: int, parts: int):
    """Positive integer vectors of length ``parts`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def monomial_basis(K: SimplicialComplex, j: int) -> list[Monomial]:
    """Degree-``j`` monomials of k[Δ] as exponent vectors, lexicographically decreasing."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    if j == 0:
        return [(0,) * K.n]
    out = []
    for size in range(1, min(j, K.d) + 1):
        for F in K.faces_by_size[size]:
            for exps in _compositions(j, size):
                a = [0] * K.n
                for v, e in zip(F, exps):
                    a[v - 1] = e
                out.append(tuple(a))
    out.sort(reverse=True)
    return out


@dataclass(frozen=True)
class LsopSet:
    """``d`` linear forms (rows of ``theta``) certified as an l.s.o.p."""

    theta: tuple[tuple[int, ...], ...]
    p: int
    seed: int | None
    verified: bool
    tries: int = 1

    @property
    def matrix(self) -> np.ndarray:
        cols = len(self.theta[0]) if self.theta else 0
        return np.array(self.theta, dtype=np.int64).reshape(len(self.theta), cols)


def verify_lsop(K: SimplicialComplex, theta, p: int) -> bool:
    """Kind-Kleinschmidt: Θ restricted to each facet's columns has full column rank."""
    theta = np.asarray(theta, dtype=np.int64).reshape(K.d, K.n)
    for F in K.facets:
        if not F:
            continue
        cols = [v - 1 for v in F]
        if rank(theta[:, cols], p) != len(F):
            return False
    return True


def make_lsop(K: SimplicialComplex, theta, field: PrimeField | int, seed: int | None = None) -> LsopSet:
    """Wrap a user-supplied Θ, running the certificate."""
    p = as_field(field).p
    arr = np.mod(np.asarray(theta, dtype=np.int64).reshape(K.d, K.n), p)
    return LsopSet(tuple(map(tuple, arr.tolist())), p, seed, verify_lsop(K, arr, p))


def random_lsop(
    K: SimplicialComplex,
    field: PrimeField | int = DEFAULT_PRIME,
    seed: int = 0,
    max_tries: int = DEFAULT_MAX_TRIES,
) -> LsopSet:
    p = as_field(field).p
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_tries + 1):
        theta = rng.integers(0, p, size=(K.d, K.n), dtype=np.int64)
        if verify_lsop(K, theta, p):
            return LsopSet(tuple(map(tuple, theta.tolist())), p, seed, True, attempt)
    raise LsopNotFoundError(p, seed, max_tries)


def search_lsop(K: SimplicialComplex, field: PrimeField | int) -> LsopSet | None:
    """Exhaustive backtracking for an l.s.o.p. over a small field.

    Vertex columns are assigned in order; a partial assignment is pruned as
    soon as a facet whose columns are all assigned fails the rank test.
    Returns ``None`` if none exists.
    """
    p = as_field(field).p
    d, n = K.d, K.n
    vectors = [np.array(v, dtype=np.int64) for v in np.ndindex(*(p,) * d) if any(v)]
    last = {v: [F for F in K.facets if F and F[-1] == v] for v in range(1, n + 1)}
    cols = np.zeros((d, n), dtype=np.int64)

    def extend(v: int) -> bool:
        if v > n:
            return True
        for vec in vectors:
            cols[:, v - 1] = vec
            if all(rank(cols[:, [u - 1 for u in F]], p) == len(F) for F in last[v]):
                if extend(v + 1):
                    return True
        cols[:, v - 1] = 0
        return False

    if d == 0 or extend(1):
        return LsopSet(tuple(map(tuple, cols.tolist())), p, None, True, 0)
    return None


@dataclass(frozen=True)
class GradedQuotient:
    """Per-degree data of ``k[Δ]/(Θ)`` for degrees ``0..d+1``.

    ``q[j]`` is the quotient dimension, ``s[j]`` the socle dimension and
    ``k[j]`` the dimension of the kernel of ``·ω`` (``None`` when not computed).
    """

    p: int
    d: int
    q: tuple[int, ...]
    s: tuple[int, ...] | None = None
    k: tuple[int, ...] | None = None
    omega: tuple[int, ...] | None = None
    seed: int | None = None
    omega_seed: int | None = None


class _Degree:
    """One graded piece: its monomial basis, pivots and normal forms."""

    def __init__(self, basis: list[Monomial], nf: np.ndarray, standard: list[int]):
        self.basis = basis
        self.index = {m: i for i, m in enumerate(basis)}
        self.nf = nf  # (len(basis), q) normal forms
        self.standard = standard  # basis positions spanning the quotient

    @property
    def q(self) -> int:
        return self.nf.shape[1]


class QuotientRing:
    """Lazy degree-by-degree model of ``k[Δ]/(Θ)``."""

    def __init__(self, K: SimplicialComplex, lsop: LsopSet):
        if not lsop.verified:
            raise UnverifiedLsopError("l.s.o.p. certificate failed; refusing to build the quotient")
        self.K = K
        self.lsop = lsop
        self.p = lsop.p
        self.theta = lsop.matrix
        self._faces = K.face_set
        self._degrees: dict[int, _Degree] = {}

    def _shift(self, m: Monomial, v: int) -> Monomial | None:
        """``m * x_v`` or ``None`` when its support leaves Δ."""
        if m[v] == 0:
            supp = tuple(sorted([u + 1 for u, e in enumerate(m) if e] + [v + 1]))
            if supp not in self._faces:
                return None
        return m[:v] + (m[v] + 1,) + m[v + 1:]

    def degree(self, j: int) -> _Degree:
        if j in self._degrees:
            return self._degrees[j]
        basis = monomial_basis(self.K, j)
        size = len(basis)
        if j == 0 or size == 0 or self.K.d == 0:
            deg = _Degree(basis, np.eye(size, dtype=np.int64), list(range(size)))
        else:
            prev = self.degree(j - 1)
            index = {m: i for i, m in enumerate(basis)}
            src, var, dst = [], [], []
            for r, m in enumerate(prev.basis):
                for v in range(self.K.n):
                    t = self._shift(m, v)
                    if t is not None:
                        src.append(r)
                        var.append(v)
                        dst.append(index[t])
            src, var, dst = np.array(src), np.array(var), np.array(dst)
            nprev = len(prev.basis)
            G = np.zeros((self.K.d * nprev, size), dtype=np.int64)
            for i in range(self.K.d):
                if len(src):
                    G[i * nprev + src, dst] = self.theta[i, var]
            r, pivots, R = rref(G, self.p)
            pivset = set(pivots)
            standard = [c for c in range(size) if c not in pivset]
            nf = np.zeros((size, len(standard)), dtype=np.int64)
            for pos, c in enumerate(standard):
                nf[c, pos] = 1
            if standard:
                for row, c in enumerate(pivots):
                    nf[c, :] = (-R[row, standard]) % self.p
            deg = _Degree(basis, nf, standard)
        self._degrees[j] = deg
        return deg

    def hilbert(self, top: int) -> tuple[int, ...]:
        return tuple(self.degree(j).q for j in range(top + 1))

    def multiplication(self, j: int, v: int) -> np.ndarray:
        """Matrix of ``·x_v : Q_j -> Q_{j+1}`` (``v`` zero-based)."""
        src, dst = self.degree(j), self.degree(j + 1)
        M = np.zeros((dst.q, src.q), dtype=np.int64)
        for col, c in enumerate(src.standard):
            t = self._shift(src.basis[c], v)
            if t is not None:
                M[:, col] = dst.nf[dst.index[t]]
        return M

    def socle_dim(self, j: int) -> int:
        q = self.degree(j).q
        if q == 0:
            return 0
        if self.degree(j + 1).q == 0:
            return q
        stack = np.vstack([self.multiplication(j, v) for v in range(self.K.n)])
        return q - rank(stack, self.p)

    def kernel_dim(self, j: int, omega: Sequence[int]) -> int:
        q = self.degree(j).q
        if q == 0:
            return 0
        if self.degree(j + 1).q == 0:
            return q
        M = sum(int(w) * self.multiplication(j, v) for v, w in enumerate(omega) if w)
        if isinstance(M, int):
            return q
        return q - rank(M % self.p, self.p)


def quotient_dims(K: SimplicialComplex, lsop: LsopSet) -> GradedQuotient:
    """Hilbert function of ``k[Δ]/(Θ)`` in degrees ``0..d+1``."""
    ring = QuotientRing(K, lsop)
    return GradedQuotient(lsop.p, K.d, ring.hilbert(K.d + 1), seed=lsop.seed)


def socle_dims(K: SimplicialComplex, lsop: LsopSet) -> GradedQuotient:
    ring = QuotientRing(K, lsop)
    q = ring.hilbert(K.d + 1)
    s = tuple(ring.socle_dim(j) for j in range(K.d + 2))
    return GradedQuotient(lsop.p, K.d, q, s, seed=lsop.seed)


def random_form(n: int, p: int, seed: int) -> tuple[int, ...]:
    return tuple(int(x) for x in np.random.default_rng(seed).integers(0, p, size=n))


def kernel_dims(K: SimplicialComplex, lsop: LsopSet, omega_seed: int) -> GradedQuotient:
    """Adds ``k_j = dim ker(·ω : Q_j -> Q_{j+1})`` for a random ω; ``k_0`` is reported too."""
    ring = QuotientRing(K, lsop)
    d = K.d
    q = ring.hilbert(d + 1)
    s = tuple(ring.socle_dim(j) for j in range(d + 2))
    omega = random_form(K.n, lsop.p, omega_seed)
    k = tuple(ring.kernel_dim(j, omega) for j in range(d + 2))
    for j in range(d + 2):
        if not s[j] <= k[j] <= q[j]:
            raise AssertionError(f"containment soc ⊆ ker(·ω) ⊆ Q violated in degree {j}")
    return GradedQuotient(lsop.p, d, q, s, k, omega, lsop.seed, omega_seed)


def analyze_quotient(K: SimplicialComplex, lsop: LsopSet, omega_seed: int) -> GradedQuotient:
    return kernel_dims(K, lsop, omega_seed)


def hpp_ring_dims(K: SimplicialComplex, lsop: LsopSet, quotient: GradedQuotient | None = None) -> tuple[int, ...]:
    """Dimensions of ``(k[Δ]/(Θ)) / I`` in degrees ``0..d``, ``I`` the socle in degrees ``1..d-1``."""
    gq = quotient if quotient is not None and quotient.s is not None else socle_dims(K, lsop)
    d = K.d
    return tuple(gq.q[j] - (gq.s[j] if 1 <= j <= d - 1 else 0) for j in range(d + 1))
