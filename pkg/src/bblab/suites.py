"""Named verification suites over the built-in corpus.

Each suite returns a list of :class:`SuiteLine`; a suite passes when every
line does.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from . import bounds as B
from .analysis import DEFAULT_SEED, choose_lsop, derive_seeds, quotient_profile, socle_report
from .complex import euler_characteristic, f_vector, g2_from_f, h_vector, is_neighborly
from .constructions import CORPUS, corpus_complex, corpus_names, handle_4, handle_sum
from .facering import DEFAULT_PRIME
from .homology import is_buchsbaum, is_homology_manifold, is_orientable_over, is_semi_eulerian, reduced_betti
from .posets import check_main_posets, construct_x, glue, h_prime_poset


@dataclass(frozen=True)
class SuiteLine:
    subject: str
    passed: bool
    detail: str = ""


def buchsbaum_corpus(p: int = DEFAULT_PRIME, include_large: bool = False) -> list[str]:
    names = []
    for name in corpus_names():
        if "large" in CORPUS[name].tags and not include_large:
            continue
        if is_buchsbaum(corpus_complex(name), p):
            names.append(name)
    return names


def suite_schenzel(p: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> list[SuiteLine]:
    lsop_seed, omega_seed = derive_seeds(seed)
    lines = []
    for name in buchsbaum_corpus(p):
        K = corpus_complex(name)
        hp = B.h_prime(h_vector(f_vector(K)), reduced_betti(K, p)).hp
        q = quotient_profile(K, choose_lsop(K, p, lsop_seed).lsop, omega_seed).q
        ok = q[: K.d + 1] == hp and q[K.d + 1] == 0
        lines.append(SuiteLine(name, ok, f"q={q} h'={hp}"))
    return lines


def suite_main2(p: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> list[SuiteLine]:
    lsop_seed, omega_seed = derive_seeds(seed)
    lines = []
    for name in buchsbaum_corpus(p):
        K = corpus_complex(name)
        beta = reduced_betti(K, p)
        gq = quotient_profile(K, choose_lsop(K, p, lsop_seed).lsop, omega_seed)
        rep = socle_report(gq.s, beta, K.d)
        ker = all(k >= s for k, s in zip(gq.k, gq.s))
        lines.append(SuiteLine(name, rep.passed and ker, f"s={gq.s} k={gq.k}"))
    return lines


def suite_newbounds(p: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> list[SuiteLine]:
    lines = []
    for name in buchsbaum_corpus(p, include_large=True):
        K = corpus_complex(name)
        h = h_vector(f_vector(K))
        beta = reduced_betti(K, p)
        hp = B.h_prime(h, beta)
        new, old = B.check_new_bounds(h, hp, beta), B.check_old_bounds(h, hp, beta)
        lines.append(SuiteLine(name, new.passed and old.passed, f"tight={new.tight}"))
    return lines


def suite_klee(p: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> list[SuiteLine]:
    lines = []
    for name in corpus_names():
        K = corpus_complex(name)
        if not is_semi_eulerian(K):
            continue
        rep = B.klee_check(h_vector(f_vector(K)), euler_characteristic(K), K.d)
        lines.append(SuiteLine(name, rep.passed, f"chi={euler_characteristic(K)}"))
    return lines


def suite_kuhnel(p: int = 2, seed: int = DEFAULT_SEED) -> list[SuiteLine]:
    """Inequality on even-dimensional manifolds; equality must coincide with (k+1)-neighborliness."""
    lines = []
    for name in corpus_names():
        K = corpus_complex(name)
        if K.d % 2 == 0 or K.d < 3 or not is_homology_manifold(K, p):
            continue
        k = (K.d - 1) // 2
        rep = B.kuhnel_check(K.n, k, euler_characteristic(K))
        eq, nb = rep.extra["equality"], is_neighborly(K, k)
        lines.append(SuiteLine(name, rep.passed and eq == nb, f"equality={eq} neighborly={nb}"))
    return lines


def suite_g2(p: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> list[SuiteLine]:
    lines = []
    for name in corpus_names():
        K = corpus_complex(name)
        if K.d < 4 or not is_homology_manifold(K, p) or not is_orientable_over(K, p):
            continue
        g2 = g2_from_f(f_vector(K), K.d)
        b1 = reduced_betti(K, p).beta(1)
        rep = B.g2_check(g2, b1, K.d)
        want = CORPUS[name].expected.get("g2")
        ok = rep.passed and (want is None or want == g2)
        lines.append(SuiteLine(name, ok, f"g2={g2} beta1={b1} equality={rep.extra['equality']}"))
    for m in (1, 2, 3):
        K = handle_4() if m == 1 else handle_sum(m)
        g2 = g2_from_f(f_vector(K), K.d)
        lines.append(SuiteLine(f"handle_sum_{m}", g2 == 10 * m, f"g2={g2}"))
    return lines


def x_family(d: int):
    return [construct_x(i, d) for i in sorted({0, 1, d - 2, d - 1})]


def suite_posets(p: int = 2, seed: int = DEFAULT_SEED, dims=(3, 4, 5)) -> list[SuiteLine]:
    lines = []
    for d in dims:
        xs = x_family(d)
        for P in xs:
            rep = check_main_posets(P, p)
            lines.append(SuiteLine(P.name, rep.passed and rep.applicable, f"tight={rep.tight}"))
        for P1, P2 in product(xs, repeat=2):
            Q = glue(P1, P2, P1.maximal[0], P2.maximal[-1], check_field=None)
            a, b, q = (h_prime_poset(X, p) for X in (P1, P2, Q))
            add_b = all(q.betti.beta(i) == a.betti.beta(i) + b.betti.beta(i) for i in range(d))
            add_h = all(q.hp[i] == a.hp[i] + b.hp[i] for i in range(1, d + 1))
            rep = check_main_posets(Q, p)
            lines.append(SuiteLine(f"glue({P1.name},{P2.name})", add_b and add_h and rep.passed and rep.applicable))
    return lines


SUITES: dict[str, Callable[..., list[SuiteLine]]] = {
    "schenzel": suite_schenzel,
    "main2": suite_main2,
    "newbounds": suite_newbounds,
    "klee": suite_klee,
    "kuhnel": suite_kuhnel,
    "g2": suite_g2,
    "posets": suite_posets,
}
