"""Simplicial posets: cells with explicit boundary lists.

The bottom element is implicit; rank-1 cells (vertices) have an empty
boundary list.  Distinct cells may share a vertex set, which is what makes
the constructions here impossible as simplicial complexes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .bounds import NA, BoundReport, Check, check_main2, h_prime
from .complex import SimplicialComplex, from_facets, h_vector
from .homology import BettiVector, reduced_betti
from .linalg import PrimeField, as_field


class InvalidPosetError(ValueError):
    pass


@dataclass(frozen=True)
class Cell:
    id: str
    rank: int
    boundary: tuple[str, ...] = ()


@dataclass(frozen=True)
class PosetValidation:
    valid: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


class SimplicialPoset:
    """A ranked cell set whose lower intervals are Boolean algebras."""

    def __init__(self, cells: Iterable[Cell | Mapping], name: str | None = None, check: bool = True):
        parsed = []
        for c in cells:
            if isinstance(c, Mapping):
                c = Cell(str(c["id"]), int(c["rank"]), tuple(str(b) for b in c.get("boundary", ())))
            parsed.append(c)
        self.cells: tuple[Cell, ...] = tuple(parsed)
        self.name = name
        self._by_id = {c.id: c for c in self.cells}
        if check:
            result = validate(self)
            if not result:
                raise InvalidPosetError(result.problems[0])

    def __getitem__(self, cid: str) -> Cell:
        return self._by_id[cid]

    def __contains__(self, cid) -> bool:
        return cid in self._by_id

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialPoset):
            return NotImplemented
        key = lambda P: sorted((c.id, c.rank, tuple(sorted(c.boundary))) for c in P.cells)
        return key(self) == key(other)

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<SimplicialPoset{tag} rank={self.rank} cells={len(self.cells)}>"

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.cells)

    @property
    def rank(self) -> int:
        return max((c.rank for c in self.cells), default=0)

    @cached_property
    def _down(self) -> dict[str, frozenset[str]]:
        """Strict down-sets (bottom excluded)."""
        memo: dict[str, frozenset[str]] = {}

        def down(cid: str) -> frozenset[str]:
            if cid in memo:
                return memo[cid]
            acc = set()
            for b in self[cid].boundary:
                acc.add(b)
                acc |= down(b)
            memo[cid] = frozenset(acc)
            return memo[cid]

        for c in self.cells:
            down(c.id)
        return memo

    def below(self, cid: str) -> frozenset[str]:
        """Cells strictly below ``cid`` other than the bottom."""
        return self._down[cid]

    def leq(self, a: str, b: str) -> bool:
        return a == b or a in self._down[b]

    def atoms(self, cid: str) -> frozenset[str]:
        c = self[cid]
        if c.rank == 1:
            return frozenset((cid,))
        return frozenset(x for x in self._down[cid] if self[x].rank == 1)

    @cached_property
    def maximal(self) -> tuple[str, ...]:
        covered = {b for c in self.cells for b in c.boundary}
        return tuple(c.id for c in self.cells if c.id not in covered)

    def to_json(self) -> dict:
        out = {"cells": [{"id": c.id, "rank": c.rank, "boundary": list(c.boundary)} for c in self.cells]}
        if self.name:
            out["name"] = self.name
        return out


def validate(P: SimplicialPoset) -> PosetValidation:
    """Check ids, ranks and that every lower interval ``[0̂, τ]`` is Boolean.

    Booleanness is checked by closing boundaries downward: the interval must
    have exactly ``2^r`` elements whose atom sets are pairwise distinct, with
    exactly ``r`` atoms (induction on rank then makes it a Boolean lattice).
    """
    problems = []
    ids = [c.id for c in P.cells]
    if len(set(ids)) != len(ids):
        problems.append("duplicate cell id")
        return PosetValidation(False, tuple(problems))
    by_id = {c.id: c for c in P.cells}
    for c in P.cells:
        if c.rank < 1:
            problems.append(f"cell {c.id!r}: rank must be >= 1")
        elif c.rank == 1:
            if c.boundary:
                problems.append(f"cell {c.id!r}: a vertex has only the implicit bottom below it")
        else:
            if len(set(c.boundary)) != len(c.boundary):
                problems.append(f"cell {c.id!r}: repeated boundary id")
            elif len(c.boundary) != c.rank:
                problems.append(f"cell {c.id!r}: rank {c.rank} needs {c.rank} boundary cells, has {len(c.boundary)}")
            for b in c.boundary:
                if b not in by_id:
                    problems.append(f"cell {c.id!r}: dangling boundary id {b!r}")
                elif by_id[b].rank != c.rank - 1:
                    problems.append(f"cell {c.id!r}: boundary {b!r} has rank {by_id[b].rank}, expected {c.rank - 1}")
    if problems:
        return PosetValidation(False, tuple(problems))
    for c in sorted(P.cells, key=lambda c: c.rank):
        lower = P.below(c.id) | {c.id}
        atomsets = {P.atoms(x) for x in lower} | {frozenset()}
        if len(lower) + 1 != 2**c.rank or len(atomsets) != 2**c.rank or len(P.atoms(c.id)) != c.rank:
            problems.append(f"cell {c.id!r}: lower interval is not a Boolean algebra")
            break
    return PosetValidation(not problems, tuple(problems))


def face_poset(K: SimplicialComplex) -> SimplicialPoset:
    """The poset of nonempty faces, ids ``"1,2,3"`` in K's normalized labels."""
    key = lambda F: ",".join(map(str, F))
    cells = []
    for size in range(1, K.d + 1):
        for F in K.faces_by_size[size]:
            bd = () if size == 1 else tuple(key(F[:k] + F[k + 1:]) for k in range(size))
            cells.append(Cell(key(F), size, bd))
    return SimplicialPoset(cells, K.name, check=False)


@dataclass(frozen=True)
class PosetProfile:
    d: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    betti: BettiVector | None = None
    hp: tuple[int, ...] | None = None
    hpp: tuple[int, ...] | None = None


def poset_f_h(P: SimplicialPoset) -> PosetProfile:
    d = P.rank
    f = [1] + [0] * d
    for c in P.cells:
        f[c.rank] += 1
    f = tuple(f)
    return PosetProfile(d, f, h_vector(f, d))


def maximal_chains(P: SimplicialPoset) -> list[tuple[str, ...]]:
    """Saturated chains from an atom to each maximal cell."""
    memo: dict[str, list[tuple[str, ...]]] = {}

    def up_to(cid: str) -> list[tuple[str, ...]]:
        if cid not in memo:
            c = P[cid]
            memo[cid] = [(cid,)] if c.rank == 1 else [ch + (cid,) for b in c.boundary for ch in up_to(b)]
        return memo[cid]

    return [ch for m in P.maximal for ch in up_to(m)]


def order_complex(P: SimplicialPoset) -> SimplicialComplex:
    """Chains of ``P - {0̂}``; vertex ``k`` is the ``k``-th cell of ``P``."""
    pos = {cid: i + 1 for i, cid in enumerate(P.ids)}
    chains = maximal_chains(P)
    if not chains:
        return from_facets([[]], P.name)
    return from_facets(([pos[c] for c in ch] for ch in chains), P.name)


def poset_link(P: SimplicialPoset, tau: str | None = None) -> SimplicialPoset:
    """``lk τ = {σ >= τ}`` re-ranked with τ as the new bottom; ``None`` is 0̂."""
    if tau is None:
        return P
    if tau not in P:
        raise KeyError(f"cell {tau!r} not in poset")
    r0 = P[tau].rank
    cells = []
    for c in P.cells:
        if c.id != tau and tau in P.below(c.id):
            bd = tuple(b for b in c.boundary if b != tau and tau in P.below(b))
            cells.append(Cell(c.id, c.rank - r0, bd))
    return SimplicialPoset(cells, check=False)


def poset_betti(P: SimplicialPoset, field: PrimeField | int) -> BettiVector:
    """Reduced Betti numbers of ``|P|`` through the order complex of ``P - {0̂}``."""
    return reduced_betti(order_complex(P), field)


def is_buchsbaum_poset(P: SimplicialPoset, field: PrimeField | int) -> bool:
    """Buchsbaumness of the order complex, decided through poset links.

    The link of a chain ``τ_1 < ... < τ_k`` in the order complex is a join of
    spheres (the Boolean intervals below ``τ_k``) with ``Δ(lk τ_k - τ_k)``;
    the sphere factor has dimension ``rk τ_k - k - 1``, so the Reisner bound
    for the chain becomes ``H̃_i(Δ(lk τ_k - τ_k)) = 0`` for
    ``i < d - rk τ_k - 1``.  Purity of the order complex is purity of P.
    """
    p = as_field(field).p
    d = P.rank
    if any(P[m].rank != d for m in P.maximal):
        return False
    for c in P.cells:
        bound = d - c.rank - 1
        if bound <= 0:
            continue  # only β_{-1} would be constrained; a pure link is nonvoid
        b = poset_betti(poset_link(P, c.id), p)
        if any(b.beta(i) for i in range(-1, bound)):
            return False
    return True


def h_prime_poset(P: SimplicialPoset, field: PrimeField | int) -> PosetProfile:
    base = poset_f_h(P)
    betti = poset_betti(P, field)
    hpv = h_prime(base.h, betti)
    return PosetProfile(base.d, base.f, base.h, betti, hpv.hp, hpv.hpp)


def check_main_posets(P: SimplicialPoset, field: PrimeField | int) -> BoundReport:
    """``h'_j(P) >= C(d, j) β_{j-1}(Δ(P̄))``; not applicable unless P is Buchsbaum."""
    prof = h_prime_poset(P, field)
    buchs = is_buchsbaum_poset(P, field)
    rep = check_main2(prof.hp, prof.betti)
    if not buchs:
        checks = tuple(Check(c.label, c.relation, None, None, NA, "poset is not Buchsbaum") for c in rep.checks)
        return BoundReport("main_posets", checks, {"buchsbaum": False})
    return BoundReport("main_posets", rep.checks, {"buchsbaum": True})


# -- gluing ------------------------------------------------------------------


def glue(
    P1: SimplicialPoset,
    P2: SimplicialPoset,
    facet1: str,
    facet2: str,
    vertex_bijection: Mapping[str, str] | None = None,
    check_field: PrimeField | int | None = 2,
) -> SimplicialPoset:
    """Identify the closed facet ``facet1`` of P1 with ``facet2`` of P2.

    ``vertex_bijection`` maps atoms of ``facet1`` to atoms of ``facet2``
    (default: sorted order).  Ids become ``"1:<id>"`` and ``"2:<id>"``;
    identified cells keep P1's id.  With ``check_field`` set, Betti numbers
    and ``h'_i`` (``i >= 1``) of the result are asserted to be the sums.
    """
    d = P1.rank
    for P, f in ((P1, facet1), (P2, facet2)):
        if f not in P:
            raise InvalidPosetError(f"no cell {f!r}")
        if P.rank != d or P[f].rank != d:
            raise InvalidPosetError(f"cell {f!r} is not a rank-{d} facet of a rank-{d} poset")
    a1, a2 = sorted(P1.atoms(facet1)), sorted(P2.atoms(facet2))
    if vertex_bijection is None:
        vertex_bijection = dict(zip(a1, a2))
    if sorted(vertex_bijection) != a1 or sorted(vertex_bijection.values()) != a2:
        raise InvalidPosetError("vertex bijection must match the atoms of the two facets")
    inverse = {w: v for v, w in vertex_bijection.items()}
    lower1 = P1.below(facet1) | {facet1}
    by_atoms1 = {P1.atoms(x): x for x in lower1}
    image = {}
    for x in P2.below(facet2) | {facet2}:
        image[x] = by_atoms1[frozenset(inverse[a] for a in P2.atoms(x))]

    def name2(x: str) -> str:
        return "1:" + image[x] if x in image else "2:" + x

    cells = [Cell("1:" + c.id, c.rank, tuple("1:" + b for b in c.boundary)) for c in P1.cells]
    cells += [Cell(name2(c.id), c.rank, tuple(name2(b) for b in c.boundary)) for c in P2.cells if c.id not in image]
    Q = SimplicialPoset(cells, check=True)
    if check_field is not None:
        a, b, q = (h_prime_poset(X, check_field) for X in (P1, P2, Q))
        assert all(q.betti.beta(i) == a.betti.beta(i) + b.betti.beta(i) for i in range(d)), "Betti numbers not additive"
        assert all(q.hp[i] == a.hp[i] + b.hp[i] for i in range(1, d + 1)), "h' not additive"
    return Q


# -- the X(i, d) family --------------------------------------------------------


def _key(vs: Iterable[int]) -> str:
    return ",".join(map(str, sorted(vs)))


def _quotient_face_poset(facets: Sequence[Sequence[int]], identify: Mapping[int, int], name: str) -> SimplicialPoset:
    """Face poset of a complex after identifying the faces inside ``identify``'s domain.

    A face contained in the domain is replaced by its image; every other face
    stays a separate cell even if it ends up with a repeated vertex set.
    """
    K = from_facets(facets)
    dom = set(identify)

    def rep(F: tuple[int, ...]) -> str:
        if set(F) <= dom:
            return _key(identify[v] for v in F)
        return _key(F)

    cells = {}
    for size in range(1, K.d + 1):
        for F in K.faces_by_size[size]:
            F = K.original(F)
            cid = rep(F)
            if cid in cells:
                continue
            bd = () if size == 1 else tuple(rep(F[:k] + F[k + 1:]) for k in range(size))
            cells[cid] = Cell(cid, size, bd)
    return SimplicialPoset(list(cells.values()), name)


def x_disjoint(d: int) -> SimplicialPoset:
    """X(0, d): two disjoint (d-1)-simplices."""
    if d < 1:
        raise ValueError("X(0,d) needs d >= 1")
    return _quotient_face_poset([range(1, d + 1), range(d + 1, 2 * d + 1)], {}, f"X(0,{d})")


def x_sphere(d: int) -> SimplicialPoset:
    """X(d-1, d): two (d-1)-simplices glued along their boundaries."""
    if d < 2:
        raise ValueError("X(d-1,d) needs d >= 2")
    cells = []
    for size in range(1, d):
        for F in combinations(range(1, d + 1), size):
            bd = () if size == 1 else tuple(_key(F[:k] + F[k + 1:]) for k in range(size))
            cells.append(Cell(_key(F), size, bd))
    ridge = tuple(_key(F) for F in combinations(range(1, d + 1), d - 1))
    cells += [Cell("A", d, ridge), Cell("B", d, ridge)]
    return SimplicialPoset(cells, f"X({d - 1},{d})")


def x_stacked_ball(d: int) -> SimplicialPoset:
    """X(1, d): the stacked ball ``{k, ..., k+d-1}``, ``k = 1..d``, with
    ``{1..d-1}`` identified to ``{d+1..2d-1}`` via ``i <-> d+i``."""
    if d < 3:
        raise ValueError("X(1,d) needs d >= 3")
    facets = [range(k, k + d) for k in range(1, d + 1)]
    identify = {d + i: i for i in range(1, d)}
    return _quotient_face_poset(facets, identify, f"X(1,{d})")


def x_doubled_ridges(d: int) -> SimplicialPoset:
    """X(d-2, d): (d-3)-skeleton of the simplex on ``[d]``, two copies ``A_i``, ``B_i``
    of each codimension-one face, and facets taking exactly one ``B``."""
    if d < 3:
        raise ValueError("X(d-2,d) needs d >= 3")
    verts = range(1, d + 1)
    cells = []
    for size in range(1, d - 1):
        for F in combinations(verts, size):
            bd = () if size == 1 else tuple(_key(F[:k] + F[k + 1:]) for k in range(size))
            cells.append(Cell(_key(F), size, bd))
    for i in verts:
        rest = [v for v in verts if v != i]
        bd = tuple(_key(G) for G in combinations(rest, d - 2)) if d > 2 else ()
        cells.append(Cell(f"A{i}", d - 1, bd))
        cells.append(Cell(f"B{i}", d - 1, bd))
    for k in verts:
        cells.append(Cell(f"F{k}", d, tuple(f"B{i}" if i == k else f"A{i}" for i in verts)))
    return SimplicialPoset(cells, f"X({d - 2},{d})")


def construct_x(i: int, d: int) -> SimplicialPoset:
    """The minimal Buchsbaum poset X(i, d) for ``i`` in ``{0, 1, d-2, d-1}``.

    For ``d = 3`` the indices 1 and d-2 coincide; the stacked-ball version is used.
    """
    if i == 0:
        return x_disjoint(d)
    if i == d - 1:
        return x_sphere(d)
    if i == 1:
        return x_stacked_ball(d)
    if i == d - 2:
        return x_doubled_ridges(d)
    raise ValueError(f"X({i},{d}) is only built for i in {{0, 1, d-2, d-1}}")
