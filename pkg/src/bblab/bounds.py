"""Exact arithmetic for the face-number formulas and inequalities.

Everything works on plain integer sequences so it can be fed hand-made
``(h, β)`` data as well as computed profiles.  Binomials are Python big
integers and the one division (Kühnel's bound) is kept as a ``Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .homology import BettiVector

PASS, FAIL, NA = "pass", "fail", "not-applicable"

_RELATIONS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
}


def binom(n: int, k: int) -> int:
    """``C(n, k)``, zero when ``k < 0`` or ``n < k`` (negative ``n`` included)."""
    if k < 0 or n < k or n < 0:
        return 0
    return comb(n, k)


class NotApplicableError(ValueError):
    pass


# -- Macaulay representations ------------------------------------------------


@dataclass(frozen=True)
class MacaulayRep:
    """``l = C(n_j, j) + C(n_{j-1}, j-1) + ... + C(n_s, s)`` as ``(n_i, i)`` pairs."""

    l: int
    j: int
    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(comb(n, i) for n, i in self.terms)


def _largest_n(l: int, i: int) -> int:
    """Largest ``n >= i`` with ``C(n, i) <= l`` (needs ``l >= 1``)."""
    lo, hi = i, i + 1
    while comb(hi, i) <= l:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, i) <= l:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(l: int, j: int) -> MacaulayRep:
    """The greedy ``j``-th Macaulay representation of ``l``."""
    if l < 0 or j < 1:
        raise ValueError(f"need l >= 0 and j >= 1, got l={l}, j={j}")
    terms = []
    rest, i = l, j
    while rest > 0 and i >= 1:
        n = _largest_n(rest, i)
        terms.append((n, i))
        rest -= comb(n, i)
        i -= 1
    rep = MacaulayRep(l, j, tuple(terms))
    assert rest == 0 and rep.value() == l
    assert all(a[0] > b[0] for a, b in zip(terms, terms[1:]))
    assert not terms or terms[-1][0] >= terms[-1][1] >= 1
    return rep


def pseudopower(l: int, j: int) -> int:
    """``l^<j>``: shift each ``C(n_i, i)`` of the representation to ``C(n_i+1, i+1)``."""
    return sum(comb(n + 1, i + 1) for n, i in macaulay_rep(l, j).terms)


# -- h' and h'' ----------------------------------------------------------------


def _betti(beta) -> tuple[int, ...]:
    """Accept a BettiVector or a plain ``(β_{-1}, ..., β_{d-1})`` sequence."""
    return tuple(beta.entries if isinstance(beta, BettiVector) else beta)


def _b(beta: tuple[int, ...], i: int) -> int:
    k = i + 1
    return beta[k] if 0 <= k < len(beta) else 0


@dataclass(frozen=True)
class HPrimeVector:
    hp: tuple[int, ...]
    hpp: tuple[int, ...]
    d: int
    p: int | None = None


def h_prime(h: Sequence[int], beta) -> HPrimeVector:
    """``h'_j = h_j + C(d,j) sum_{i<j} (-1)^(j-i-1) β_{i-1}`` and ``h''_j = h'_j - C(d,j) β_{j-1}``."""
    h = tuple(h)
    d = len(h) - 1
    b = _betti(beta)
    hp = tuple(
        h[j] + comb(d, j) * sum((-1) ** (j - i - 1) * _b(b, i - 1) for i in range(j)) for j in range(d + 1)
    )
    hpp = tuple(hp[j] - comb(d, j) * _b(b, j - 1) for j in range(d + 1))
    return HPrimeVector(hp, hpp, d, beta.p if isinstance(beta, BettiVector) else None)


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """One inequality instance ``left <relation> right``."""

    label: str
    relation: str
    left: int | Fraction | None
    right: int | Fraction | None
    verdict: str
    note: str = ""

    @property
    def slack(self):
        if self.verdict == NA:
            return None
        if self.relation == "<=":
            return self.right - self.left
        return self.left - self.right

    @property
    def tight(self) -> bool:
        return self.verdict == PASS and self.slack == 0

    def recompute(self) -> str:
        if self.left is None or self.right is None:
            return NA
        return PASS if _RELATIONS[self.relation](self.left, self.right) else FAIL


def compare(label: str, relation: str, left, right, note: str = "") -> Check:
    verdict = PASS if _RELATIONS[relation](left, right) else FAIL
    return Check(label, relation, left, right, verdict, note)


def _na(label, relation, note) -> Check:
    return Check(label, relation, None, None, NA, note)


@dataclass(frozen=True)
class BoundReport:
    name: str
    checks: tuple[Check, ...]
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """No failing check (not-applicable entries do not count against it)."""
        return all(c.verdict != FAIL for c in self.checks)

    @property
    def applicable(self) -> bool:
        return any(c.verdict != NA for c in self.checks)

    @property
    def tight(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.checks if c.tight)

    def consistent(self) -> bool:
        return all(c.recompute() == c.verdict for c in self.checks)

    def __getitem__(self, label: str) -> Check:
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)


# -- the inequalities ----------------------------------------------------------


def check_main2(hp, beta) -> BoundReport:
    """``h'_j >= C(d, j) β_{j-1}`` for ``0 <= j <= d``."""
    hpv = hp.hp if isinstance(hp, HPrimeVector) else tuple(hp)
    d = len(hpv) - 1
    b = _betti(beta)
    checks = tuple(compare(f"j={j}", ">=", hpv[j], comb(d, j) * _b(b, j - 1)) for j in range(d + 1))
    return BoundReport("main2", checks)


def _macaulay_bounds(name: str, h, hp, beta, coeff) -> BoundReport:
    h = tuple(h)
    hpv = hp.hp if isinstance(hp, HPrimeVector) else tuple(hp)
    d = len(h) - 1
    b = _betti(beta)
    checks = []
    for j in range(1, d):
        operand = h[j] - coeff(d, j) * _b(b, j - 1)
        label = f"j={j}"
        if operand < 0:
            checks.append(_na(label, "<=", f"negative Macaulay operand {operand}"))
            continue
        checks.append(compare(label, "<=", hpv[j + 1], pseudopower(operand, j), f"operand {operand}"))
    return BoundReport(name, tuple(checks))


def check_new_bounds(h, hp, beta) -> BoundReport:
    """``h'_{j+1} <= (h_j - C(d, j) β_{j-1})^<j>`` for ``1 <= j <= d-1``."""
    return _macaulay_bounds("new_bounds", h, hp, beta, comb)


def check_old_bounds(h, hp, beta) -> BoundReport:
    """The weaker ``h'_{j+1} <= (h_j - C(d-1, j) β_{j-1})^<j>``."""
    return _macaulay_bounds("old_bounds", h, hp, beta, lambda d, j: comb(d - 1, j))


def check_macaulay_sequence(F: Sequence[int]) -> BoundReport:
    """``F_0 = 1`` and ``0 <= F_{j+1} <= F_j^<j>`` for ``j >= 1``."""
    F = tuple(F)
    checks = [compare("F_0", "==", F[0], 1)]
    for j, x in enumerate(F):
        if j >= 1:
            checks.append(compare(f"F_{j}>=0", ">=", x, 0))
    for j in range(1, len(F) - 1):
        if F[j] < 0:
            checks.append(_na(f"j={j}", "<=", "negative entry"))
        else:
            checks.append(compare(f"j={j}", "<=", F[j + 1], pseudopower(F[j], j)))
    return BoundReport("macaulay", tuple(checks))


def check_stanley_cm(h: Sequence[int]) -> BoundReport:
    """Stanley's conditions on h-vectors of Cohen-Macaulay complexes."""
    rep = check_macaulay_sequence(h)
    return BoundReport("stanley_cm", rep.checks)


def klee_check(h: Sequence[int], chi: int, d: int) -> BoundReport:
    """``h_{d-i} - h_i = (-1)^i C(d, i) (χ - χ(S^{d-1}))`` for ``0 <= i <= d``."""
    h = tuple(h)
    chi_sphere = 1 + (-1) ** (d - 1)
    checks = tuple(
        compare(f"i={i}", "==", h[d - i] - h[i], (-1) ** i * comb(d, i) * (chi - chi_sphere)) for i in range(d + 1)
    )
    return BoundReport("klee", checks)


def kuhnel_check(n: int, k: int, chi: int) -> BoundReport:
    """``(-1)^k (χ - 2) <= C(n-k-2, k+1) / C(2k+1, k)`` for a 2k-manifold on ``n`` vertices."""
    lhs = (-1) ** k * (chi - 2)
    rhs = Fraction(binom(n - k - 2, k + 1), comb(2 * k + 1, k))
    c = compare(f"n={n},k={k}", "<=", Fraction(lhs), rhs)
    return BoundReport("kuhnel", (c,), {"equality": c.verdict == PASS and lhs == rhs})


def g2_check(g2: int, beta1: int, d: int) -> BoundReport:
    """``g_2 >= C(d+1, 2) β_1`` (needs ``d >= 4``)."""
    label = f"d={d}"
    if d < 4:
        c = _na(label, ">=", "requires d >= 4")
        return BoundReport("g2", (c,), {"equality": False})
    rhs = comb(d + 1, 2) * beta1
    c = compare(label, ">=", g2, rhs)
    return BoundReport("g2", (c,), {"equality": g2 == rhs})


def terai_check(h: Sequence[int], d: int | None = None) -> BoundReport:
    """``i h_i + (d - i + 1) h_{i-1} >= 0`` for ``1 <= i <= d``."""
    h = tuple(h)
    d = len(h) - 1 if d is None else d
    checks = tuple(compare(f"i={i}", ">=", i * h[i] + (d - i + 1) * h[i - 1], 0) for i in range(1, d + 1))
    return BoundReport("terai", checks)


def terai_yoshida_hvector(n: int, d: int, i: int) -> tuple[int, ...]:
    """The minimal h-vector of an ``i``-neighborly Buchsbaum complex with one Betti number.

    ``h_k = C(n-d+k-1, k)`` for ``k <= i`` and ``(-1)^(k-i) C(d, k) β`` above,
    with ``β = C(n-d+i-1, i) / C(d, i)``.
    """
    if not 1 <= i <= d:
        raise NotApplicableError(f"need 1 <= i <= d, got i={i}, d={d}")
    num, den = binom(n - d + i - 1, i), comb(d, i)
    if num % den:
        raise NotApplicableError(f"C({n - d + i - 1},{i}) = {num} is not divisible by C({d},{i}) = {den}")
    beta = num // den
    return tuple(binom(n - d + k - 1, k) if k <= i else (-1) ** (k - i) * comb(d, k) * beta for k in range(d + 1))
