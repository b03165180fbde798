"""Independent enumeration oracles shared by the tests."""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement


def monomials(n: int, j: int) -> list[tuple[int, ...]]:
    out = []
    for c in combinations_with_replacement(range(n), j):
        a = [0] * n
        for v in c:
            a[v] += 1
        out.append(tuple(a))
    return out


def divisors_one_down(m: tuple[int, ...]) -> set[tuple[int, ...]]:
    return {m[:v] + (m[v] - 1,) + m[v + 1:] for v in range(len(m)) if m[v]}


def upper_count(S: set, n: int, j: int) -> int:
    """Degree-(j+1) monomials all of whose degree-j divisors lie in S."""
    return sum(1 for m in monomials(n, j + 1) if divisors_one_down(m) <= S)


def revlex_segment(l: int, j: int, n: int) -> list[tuple[int, ...]]:
    """The first ``l`` degree-``j`` monomials in reverse lexicographic order."""
    return sorted(monomials(n, j), key=lambda a: a[::-1])[:l]


def compressed_max(l: int, j: int) -> int:
    """Largest F_{j+1} of a compressed multicomplex with F_j = l."""
    n = l + 1
    return upper_count(set(revlex_segment(l, j, n)), n, j)


def exhaustive_max(l: int, j: int, n: int) -> int:
    """Max F_{j+1} over every set of ``l`` degree-``j`` monomials in ``n`` variables."""
    mons = monomials(n, j)
    return max(upper_count(set(S), n, j) for S in combinations(mons, l))


def segment_vars(l: int, j: int) -> int:
    seg = revlex_segment(l, j, l + 1)
    return max((max(v for v in range(len(a)) if a[v]) + 1 for a in seg), default=0)
