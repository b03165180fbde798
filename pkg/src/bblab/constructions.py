"""Built-in complexes: simplex boundaries, cyclic polytopes, stacked spheres,
Walkup's class operations and a few small manifolds stored as data files."""
from __future__ import annotations

import hashlib
import json
import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable, Mapping, Sequence

from .complex import ComplexError, SimplicialComplex, f_vector, from_facets

CORPUS_ENV = "BBLAB_CORPUS_DIR"
DATA_DIR = Path(__file__).with_name("data")
MANIFEST = "MANIFEST.json"


class HandleError(ComplexError):
    pass


class CorpusError(ComplexError):
    pass


def _labelled(K: SimplicialComplex) -> list[tuple[int, ...]]:
    return [K.original(F) for F in K.facets]


def simplex_boundary(d: int) -> SimplicialComplex:
    """``∂Δ^d``: all ``d``-subsets of ``[d+1]`` (a ``(d-1)``-sphere)."""
    if d < 1:
        raise ValueError("simplex_boundary needs d >= 1")
    return from_facets(combinations(range(1, d + 2), d), f"simplex_boundary_{d}")


def _gale_even(S: Sequence[int], n: int) -> bool:
    inside = set(S)
    gaps = [v for v in range(1, n + 1) if v not in inside]
    for i, j in zip(gaps, gaps[1:]):
        if sum(1 for v in S if i < v < j) % 2:
            return False
    return True


def cyclic_polytope_boundary(d: int, n: int) -> SimplicialComplex:
    """Boundary of the cyclic ``d``-polytope on ``n`` vertices via Gale's evenness condition."""
    if d < 2:
        raise ValueError("cyclic polytopes need d >= 2")
    if n <= d:
        raise ValueError(f"C_{d}({n}) needs n >= d+1")
    facets = [S for S in combinations(range(1, n + 1), d) if _gale_even(S, n)]
    return from_facets(facets, f"cyclic_{d}_{n}")


def stacked_sphere(d: int, n: int) -> SimplicialComplex:
    """Boundary of the linear stacked ball ``{k, ..., k+d}``: vertex ``v`` subdivides ``{v-d, ..., v-1}``."""
    if d < 1 or n < d + 1:
        raise ValueError("stacked_sphere needs d >= 1 and n >= d+1")
    K = simplex_boundary(d)
    for v in range(d + 2, n + 1):
        K = hd_subdivide_facet(K, range(v - d, v))
    return K.with_name(f"stacked_{d}_{n}")


# -- Walkup's class ------------------------------------------------------------


def _as_facet(K: SimplicialComplex, facet) -> tuple[int, ...]:
    facet = tuple(sorted(facet))
    if facet not in {tuple(sorted(F)) for F in _labelled(K)}:
        raise ComplexError(f"{facet} is not a facet")
    return facet


def hd_subdivide_facet(K: SimplicialComplex, facet) -> SimplicialComplex:
    """Replace ``facet`` by the cone from a new vertex over its boundary."""
    facet = _as_facet(K, facet)
    v = max(K.labels) + 1
    facets = [F for F in _labelled(K) if tuple(sorted(F)) != facet]
    facets += [tuple(u for u in facet if u != w) + (v,) for w in facet]
    return from_facets(facets, K.name)


def _bijection(f1: Sequence[int], f2: Sequence[int], bijection: Mapping[int, int] | None) -> dict[int, int]:
    if bijection is None:
        return dict(zip(f1, f2))
    bij = dict(bijection)
    if sorted(bij) != list(f1) or sorted(bij.values()) != list(f2):
        raise ComplexError("bijection must map the first facet's vertices onto the second's")
    return bij


def _expected_after_gluing(f: Sequence[int], d: int) -> tuple[int, ...]:
    """f-vector after gluing two facet boundaries and deleting both facets."""
    out = [f[k] - (comb(d, k) if k < d else 2) for k in range(d + 1)]
    out[0] = 1
    return tuple(out)


def hd_connected_sum(
    K1: SimplicialComplex,
    K2: SimplicialComplex,
    facet1,
    facet2,
    bijection: Mapping[int, int] | None = None,
) -> SimplicialComplex:
    """Delete ``facet1`` and ``facet2`` and glue the two boundaries; ``bijection`` maps facet1 to facet2."""
    if K1.d != K2.d:
        raise ComplexError("connected sum needs complexes of equal dimension")
    f1, f2 = _as_facet(K1, facet1), _as_facet(K2, facet2)
    bij = _bijection(f1, f2, bijection)
    back = {w: v for v, w in bij.items()}
    shift = max(K1.labels)
    rename = {u: back.get(u, u + shift) for u in K2.labels}
    facets = [F for F in _labelled(K1) if tuple(sorted(F)) != f1]
    facets += [tuple(rename[u] for u in F) for F in _labelled(K2) if tuple(sorted(F)) != f2]
    return from_facets(facets, K1.name)


def graph_distances(K: SimplicialComplex, source: int) -> dict[int, int]:
    """1-skeleton distances from ``source`` (original labels)."""
    adj: dict[int, set[int]] = {u: set() for u in K.labels}
    for a, b in K.faces(1):
        a, b = K.labels[a - 1], K.labels[b - 1]
        adj[a].add(b)
        adj[b].add(a)
    dist = {source: 0}
    todo = deque([source])
    while todo:
        u = todo.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                todo.append(w)
    return dist


def hd_handle(
    K: SimplicialComplex,
    facet1,
    facet2,
    bijection: Mapping[int, int] | None = None,
) -> SimplicialComplex:
    """Delete two facets and identify their boundaries through ``bijection``.

    Every identified pair must be at distance at least 3 in the 1-skeleton,
    which keeps the result a simplicial complex.
    """
    f1, f2 = _as_facet(K, facet1), _as_facet(K, facet2)
    if set(f1) & set(f2):
        raise HandleError("handle facets must be disjoint")
    bij = _bijection(f1, f2, bijection)
    for v, w in bij.items():
        dist = graph_distances(K, v).get(w)
        if dist is not None and dist < 3:
            raise HandleError(f"vertices {v} and {w} are at distance {dist} < 3")
    back = {w: v for v, w in bij.items()}
    facets = [tuple(back.get(u, u) for u in F) for F in _labelled(K) if tuple(sorted(F)) not in (f1, f2)]
    H = from_facets(facets, K.name)
    if f_vector(H) != _expected_after_gluing(f_vector(K), K.d):
        raise HandleError("identification merges faces; result would not be a simplicial complex")
    return H


# -- small manifolds as data files -------------------------------------------------


def corpus_dir() -> Path:
    env = os.environ.get(CORPUS_ENV)
    return Path(env) if env else DATA_DIR


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def load_complex_file(path: Path | str) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, dict) or "facets" not in obj:
        raise CorpusError(f"{path}: expected an object with a 'facets' list")
    return from_facets(obj["facets"], obj.get("name"))


@lru_cache(maxsize=None)
def _load_manifold(directory: str, name: str) -> SimplicialComplex:
    root = Path(directory)
    path = root / f"{name}.json"
    if not path.exists():
        raise CorpusError(f"unknown manifold {name!r} in {root}")
    manifest = root / MANIFEST
    if manifest.exists():
        sums = json.loads(manifest.read_text(encoding="utf-8"))
        want = sums.get(path.name)
        if want is not None and want != _sha256(path):
            raise CorpusError(f"checksum mismatch for {path}")
    return load_complex_file(path).with_name(name)


def small_manifold(name: str) -> SimplicialComplex:
    """``torus_7``, ``rp2_6`` or ``klein_8`` from the corpus directory."""
    return _load_manifold(str(corpus_dir()), name)


def write_manifest(directory: Path | str = DATA_DIR) -> dict[str, str]:
    root = Path(directory)
    sums = {p.name: _sha256(p) for p in sorted(root.glob("*.json")) if p.name != MANIFEST}
    (root / MANIFEST).write_text(json.dumps(sums, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return sums


# -- ℋ⁴ handle examples -------------------------------------------------------------

# End facets of the linear stacked 4-sphere on 14 vertices; pairing i with
# i+10 keeps every pair at distance 3 and gives the orientable S^3 x S^1 on
# 10 vertices (swapping 13 and 14 gives the twisted bundle instead).
HANDLE_BASE_N = 14
HANDLE_FACETS = ((1, 2, 3, 4), (11, 12, 13, 14))
HANDLE_BIJECTION = {1: 11, 2: 12, 3: 13, 4: 14}


def handle_4() -> SimplicialComplex:
    K = stacked_sphere(4, HANDLE_BASE_N)
    f1, f2 = HANDLE_FACETS
    return hd_handle(K, f1, f2, HANDLE_BIJECTION).with_name("handle_4")


def handle_sum(m: int) -> SimplicialComplex:
    """Connected sum of ``m`` copies of :func:`handle_4`."""
    if m < 1:
        raise ValueError("need m >= 1")
    H = handle_4()
    K = H
    for _ in range(m - 1):
        F1 = K.original(K.facets[-1])
        F2 = H.original(H.facets[0])
        K = hd_connected_sum(K, H, F1, F2)
    return K.with_name(f"handle_sum_{m}")


# -- corpus registry ----------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    """A named complex with independently known values.

    ``expected`` holds ``f`` (f-vector), ``chi`` (Euler characteristic) and
    ``betti`` (field -> reduced Betti vector); ``source`` says how each was
    obtained.
    """

    name: str
    builder: Callable[..., SimplicialComplex]
    params: tuple = ()
    expected: dict = field(default_factory=dict)
    source: str = ""
    tags: frozenset[str] = frozenset()

    def build(self) -> SimplicialComplex:
        return self.builder(*self.params).with_name(self.name)


def _sphere(d: int) -> dict:
    b = tuple(1 if i == d - 1 else 0 for i in range(-1, d))
    return {p: b for p in (2, 3, 32003)}


_SPHERE = frozenset({"buchsbaum", "sphere", "semi-eulerian", "manifold"})
_MANIFOLD = frozenset({"buchsbaum", "semi-eulerian", "manifold"})

CORPUS: dict[str, CorpusEntry] = {}


def _register(e: CorpusEntry) -> None:
    CORPUS[e.name] = e


for _d in (2, 3, 4, 5):
    _register(CorpusEntry(
        f"simplex_boundary_{_d}", simplex_boundary, (_d,),
        {"f": tuple(comb(_d + 1, k) for k in range(_d + 1)), "chi": 1 + (-1) ** (_d - 1), "betti": _sphere(_d)},
        "binomial count", _SPHERE,
    ))
_register(CorpusEntry("cyclic_4_7", cyclic_polytope_boundary, (4, 7),
                      {"f": (1, 7, 21, 28, 14), "chi": 0, "betti": _sphere(4)},
                      "neighborly h-vector (1,3,6,3,1)", _SPHERE))
_register(CorpusEntry("cyclic_4_8", cyclic_polytope_boundary, (4, 8),
                      {"f": (1, 8, 28, 40, 20), "chi": 0, "betti": _sphere(4)},
                      "neighborly h-vector (1,4,10,4,1)", _SPHERE))
_register(CorpusEntry("stacked_3_10", stacked_sphere, (3, 10),
                      {"f": (1, 10, 24, 16), "chi": 2, "betti": _sphere(3)},
                      "each subdivision adds (1,3,2)", _SPHERE))
_register(CorpusEntry("stacked_4_8", stacked_sphere, (4, 8),
                      {"f": (1, 8, 22, 28, 14), "chi": 0, "betti": _sphere(4)},
                      "each subdivision adds (1,4,6,3)", _SPHERE))
_register(CorpusEntry("torus_7", small_manifold, ("torus_7",),
                      {"f": (1, 7, 21, 14), "chi": 0, "betti": {p: (0, 0, 2, 1) for p in (2, 3, 32003)}},
                      "Möbius torus; H_1 = Z^2", _MANIFOLD | {"even-manifold"}))
_register(CorpusEntry("rp2_6", small_manifold, ("rp2_6",),
                      {"f": (1, 6, 15, 10), "chi": 1,
                       "betti": {2: (0, 0, 1, 1), 3: (0, 0, 0, 0), 32003: (0, 0, 0, 0)}},
                      "hemi-icosahedron; H_1 = Z/2", frozenset({"semi-eulerian", "manifold", "even-manifold"})))
_register(CorpusEntry("klein_8", small_manifold, ("klein_8",),
                      {"f": (1, 8, 24, 16), "chi": 0,
                       "betti": {2: (0, 0, 2, 1), 3: (0, 0, 1, 0), 32003: (0, 0, 1, 0)}},
                      "8-vertex Klein bottle; H_1 = Z + Z/2", _MANIFOLD | {"even-manifold"}))
_register(CorpusEntry("handle_4", handle_4, (),
                      {"betti": {p: (0, 0, 1, 1, 1) for p in (2, 3, 32003)}, "chi": 0, "g2": 10},
                      "S^3 x S^1 from one handle", _MANIFOLD | {"hd"}))
_register(CorpusEntry("handle_sum_2", handle_sum, (2,),
                      {"betti": {p: (0, 0, 2, 2, 1) for p in (2, 3, 32003)}, "chi": 0, "g2": 20},
                      "connected sum of two handles", _MANIFOLD | {"hd", "large"}))


def corpus_names(tag: str | None = None) -> list[str]:
    return [n for n, e in CORPUS.items() if tag is None or tag in e.tags]


def corpus_complex(name: str) -> SimplicialComplex:
    if name not in CORPUS:
        raise CorpusError(f"unknown corpus entry {name!r}")
    return CORPUS[name].build()
