"""Simplicial complexes on normalized vertex sets, face numbers and links."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

Face = tuple[int, ...]


class ComplexError(ValueError):
    pass


class MalformedComplexError(ComplexError):
    pass


class FaceNotFoundError(ComplexError, KeyError):
    pass


class VoidComplexError(ComplexError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets over vertices ``1..n``.

    ``labels[v - 1]`` is the original label of vertex ``v``.  The empty
    complex ``{∅}`` has ``facets == ((),)``; the void complex has no faces
    at all and ``facets == ()``.
    """

    facets: tuple[Face, ...]
    n: int
    labels: tuple[int, ...]
    name: str | None = None

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for ``{∅}``.  Undefined (error) for the void complex."""
        _require_nonvoid(self)
        return max(len(F) for F in self.facets) - 1

    @property
    def d(self) -> int:
        """Rank ``d = dim + 1``."""
        return self.dim + 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @cached_property
    def faces_by_size(self) -> tuple[tuple[Face, ...], ...]:
        """``faces_by_size[k]`` lists the faces with ``k`` vertices, sorted."""
        _require_nonvoid(self)
        levels: list[set[Face]] = [set() for _ in range(self.d + 1)]
        for F in self.facets:
            for k in range(len(F) + 1):
                levels[k].update(combinations(F, k))
        return tuple(tuple(sorted(lv)) for lv in levels)

    @cached_property
    def face_set(self) -> frozenset[Face]:
        return frozenset(F for lv in self.faces_by_size for F in lv)

    def faces(self, dim: int | None = None) -> tuple[Face, ...]:
        if dim is None:
            return tuple(F for lv in self.faces_by_size for F in lv)
        if dim + 1 < 0 or dim + 1 >= len(self.faces_by_size):
            return ()
        return self.faces_by_size[dim + 1]

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.face_set

    def original(self, face: Iterable[int]) -> tuple[int, ...]:
        """Translate a face back to the input labels."""
        return tuple(self.labels[v - 1] for v in face)

    def with_name(self, name: str | None) -> SimplicialComplex:
        return SimplicialComplex(self.facets, self.n, self.labels, name)

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        if self.is_void:
            return f"<SimplicialComplex{tag} void>"
        return f"<SimplicialComplex{tag} n={self.n} dim={self.dim} facets={len(self.facets)}>"


def _require_nonvoid(K: SimplicialComplex) -> None:
    if K.is_void:
        raise VoidComplexError("operation undefined on the void complex")


def from_facets(facet_list: Iterable[Iterable[int]], name: str | None = None) -> SimplicialComplex:
    """Normalize a facet list: deduplicate, drop dominated sets, relabel to ``1..n``.

    ``from_facets([[]])`` is the empty complex ``{∅}``; ``from_facets([])`` is void.
    """
    raw = []
    for F in facet_list:
        F = list(F)
        for v in F:
            if isinstance(v, bool) or not isinstance(v, int):
                raise MalformedComplexError(f"vertex labels must be integers, got {v!r}")
        s = frozenset(F)
        if len(s) != len(F):
            raise MalformedComplexError(f"facet {F} repeats a vertex")
        raw.append(s)
    if not raw:
        return SimplicialComplex((), 0, (), name)
    nonempty = [s for s in raw if s]
    if nonempty and len(nonempty) != len(raw):
        raise MalformedComplexError("empty facet listed alongside nonempty facets")
    if not nonempty:
        return SimplicialComplex(((),), 0, (), name)
    uniq = sorted(set(nonempty), key=len, reverse=True)
    maximal: list[frozenset] = []
    for s in uniq:
        if not any(s < t for t in maximal):
            maximal.append(s)
    labels = tuple(sorted(set().union(*maximal)))
    index = {v: i + 1 for i, v in enumerate(labels)}
    facets = tuple(sorted(tuple(sorted(index[v] for v in s)) for s in maximal))
    return SimplicialComplex(facets, len(labels), labels, name)


def relabel(K: SimplicialComplex, mapping: Mapping[int, int]) -> SimplicialComplex:
    """Apply a vertex map (on normalized labels) and renormalize."""
    return from_facets(([mapping[v] for v in F] for F in K.facets), K.name)


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_{d-1})``."""
    return tuple(len(lv) for lv in K.faces_by_size)


def h_vector(f: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    """Transform ``(f_{-1}, ..., f_{d-1})`` into ``(h_0, ..., h_d)``.

    ``h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_{i-1}``.
    """
    f = tuple(f)
    if d is None:
        d = len(f) - 1
    if len(f) != d + 1:
        raise ValueError(f"f-vector of length {len(f)} does not match rank d={d}")
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)
    )


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`h_vector`: ``f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i``."""
    h = tuple(h)
    d = len(h) - 1
    return tuple(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def g_vector(h: Sequence[int]) -> tuple[int, ...]:
    """``(g_0, ..., g_{floor(d/2)})`` with ``g_0 = h_0`` and ``g_i = h_i - h_{i-1}``."""
    h = tuple(h)
    d = len(h) - 1
    return (h[0],) + tuple(h[i] - h[i - 1] for i in range(1, d // 2 + 1))


def g2_from_f(f: Sequence[int], d: int) -> int:
    """``g_2 = f_1 - d f_0 + C(d+1, 2)``, read straight off the f-vector."""
    f1 = f[2] if len(f) > 2 else 0
    return f1 - d * f[1] + comb(d + 1, 2)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Unreduced Euler characteristic ``sum_{j>=0} (-1)^j f_j``."""
    f = f_vector(K)
    return sum((-1) ** j * f[j + 1] for j in range(len(f) - 1))


def link(K: SimplicialComplex, F: Iterable[int] = ()) -> SimplicialComplex:
    """``lk F = {G : G ∩ F = ∅, G ∪ F ∈ K}``, keeping K's original labels."""
    _require_nonvoid(K)
    F = tuple(sorted(F))
    if F not in K.face_set:
        raise FaceNotFoundError(f"{F} is not a face")
    if not F:
        return K
    fs = set(F)
    pieces = [[K.labels[v - 1] for v in G if v not in fs] for G in K.facets if fs.issubset(G)]
    return from_facets(pieces)


def is_pure(K: SimplicialComplex) -> bool:
    _require_nonvoid(K)
    return len({len(F) for F in K.facets}) == 1


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    """Faces of dimension at most ``k``."""
    _require_nonvoid(K)
    if k < -1:
        raise ValueError("skeleton dimension must be >= -1")
    pieces = set()
    for F in K.facets:
        if len(F) <= k + 1:
            pieces.add(F)
        else:
            pieces.update(combinations(F, k + 1))
    return from_facets(([K.labels[v - 1] for v in G] for G in pieces), K.name)


def is_neighborly(K: SimplicialComplex, k: int) -> bool:
    """True iff every ``k+1`` vertices span a face, i.e. K is ``(k+1)``-neighborly."""
    _require_nonvoid(K)
    m = k + 1
    if m > K.n:
        return False
    level = K.faces_by_size[m] if m < len(K.faces_by_size) else ()
    return len(level) == comb(K.n, m)
