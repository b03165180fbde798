"""Full profiles of complexes and posets, serialized deterministically."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import bounds as B
from .complex import SimplicialComplex, euler_characteristic, f_vector, g_vector, h_vector, is_neighborly, is_pure
from .facering import (
    DEFAULT_MAX_TRIES,
    DEFAULT_PRIME,
    GradedQuotient,
    LsopNotFoundError,
    LsopSet,
    QuotientRing,
    random_form,
    random_lsop,
    search_lsop,
)
from .homology import (
    is_buchsbaum,
    is_cohen_macaulay,
    is_homology_manifold,
    is_orientable_over,
    is_semi_eulerian,
    reduced_betti,
)
from .posets import SimplicialPoset, check_main_posets, h_prime_poset, is_buchsbaum_poset

DEFAULT_SEED = 0
# exhaustive l.s.o.p. search is only attempted when p^d stays small
SEARCH_LIMIT = 4096


def derive_seeds(seed: int) -> tuple[int, int]:
    """Independent seeds for Θ and ω, both determined by ``seed``."""
    a, b = np.random.SeedSequence(seed).spawn(2)
    return int(a.generate_state(1)[0]), int(b.generate_state(1)[0])


@dataclass(frozen=True)
class LsopChoice:
    lsop: LsopSet
    method: str


def choose_lsop(K: SimplicialComplex, p: int, seed: int, max_tries: int = DEFAULT_MAX_TRIES) -> LsopChoice:
    """Random Θ first; over small fields fall back to exhaustive search."""
    try:
        return LsopChoice(random_lsop(K, p, seed, max_tries), "random")
    except LsopNotFoundError as err:
        if p ** K.d > SEARCH_LIMIT:
            raise
        found = search_lsop(K, p)
        if found is None:
            raise LsopNotFoundError(p, seed, err.tries) from None
        return LsopChoice(found, "search")


def quotient_profile(K: SimplicialComplex, lsop: LsopSet, omega_seed: int) -> GradedQuotient:
    ring = QuotientRing(K, lsop)
    d = K.d
    q = ring.hilbert(d + 1)
    s = tuple(ring.socle_dim(j) for j in range(d + 2))
    omega = random_form(K.n, lsop.p, omega_seed)
    k = tuple(ring.kernel_dim(j, omega) for j in range(d + 2))
    return GradedQuotient(lsop.p, d, q, s, k, omega, lsop.seed, omega_seed)


def _report_json(rep: B.BoundReport) -> dict:
    return {
        "name": rep.name,
        "passed": rep.passed,
        "tight": list(rep.tight),
        "checks": [
            {"label": c.label, "relation": c.relation, "left": c.left, "right": c.right, "verdict": c.verdict, "note": c.note}
            for c in rep.checks
        ],
        **({"extra": rep.extra} if rep.extra else {}),
    }


def schenzel_report(q: tuple[int, ...], hp: tuple[int, ...]) -> B.BoundReport:
    d = len(hp) - 1
    checks = [B.compare(f"j={j}", "==", q[j], hp[j]) for j in range(d + 1)]
    checks += [B.compare(f"j={j}", "==", q[j], 0) for j in range(d + 1, len(q))]
    return B.BoundReport("schenzel", tuple(checks))


def socle_report(s: tuple[int, ...], beta, d: int) -> B.BoundReport:
    checks = tuple(B.compare(f"j={j}", ">=", s[j], comb(d, j) * beta.beta(j - 1)) for j in range(d + 1))
    return B.BoundReport("main2_socle", checks)


def kernel_report(k: tuple[int, ...], s: tuple[int, ...], beta, d: int) -> B.BoundReport:
    checks = []
    for j in range(d + 1):
        checks.append(B.compare(f"k_{j}>=s_{j}", ">=", k[j], s[j]))
        checks.append(B.compare(f"s_{j}>=bound", ">=", s[j], comb(d, j) * beta.beta(j - 1)))
    return B.BoundReport("ker_ineq", tuple(checks))


def hpp_report(q: tuple[int, ...], s: tuple[int, ...], hpp: tuple[int, ...], d: int) -> B.BoundReport:
    """Exploratory: socle-quotient dimensions against ``h''`` in degrees ``1..d-1``."""
    dims = [q[j] - s[j] for j in range(1, d)]
    checks = tuple(B.compare(f"j={j}", "<=", dims[j - 1], hpp[j]) for j in range(1, d))
    return B.BoundReport("hpp_exploratory", checks, {"equal_up_to_half": all(dims[j - 1] == hpp[j] for j in range(1, d // 2 + 1))})


def analyze_complex(
    K: SimplicialComplex,
    fields=(DEFAULT_PRIME,),
    seed: int = DEFAULT_SEED,
    algebra: bool = True,
) -> dict:
    f = f_vector(K)
    d = K.d
    h = h_vector(f, d)
    chi = euler_characteristic(K)
    pure = is_pure(K)
    semi = is_semi_eulerian(K)
    lsop_seed, omega_seed = derive_seeds(seed)
    out = {
        "kind": "complex",
        "name": K.name,
        "n": K.n,
        "d": d,
        "f": f,
        "h": h,
        "g": g_vector(h),
        "chi": chi,
        "seed": seed,
        "pure": pure,
        "semi_eulerian": semi,
        "fields": [],
    }
    for p in fields:
        beta = reduced_betti(K, p)
        buchs = is_buchsbaum(K, p)
        manifold = pure and is_homology_manifold(K, p)
        orientable = manifold and is_orientable_over(K, p)
        hpv = B.h_prime(h, beta)
        entry = {
            "p": p,
            "betti": beta.entries,
            "cohen_macaulay": is_cohen_macaulay(K, p),
            "buchsbaum": buchs,
            "homology_manifold": manifold,
            "orientable": orientable,
            "h_prime": hpv.hp,
            "h_double_prime": hpv.hpp,
        }
        reports = []
        if buchs:
            reports += [
                B.check_main2(hpv, beta),
                B.check_new_bounds(h, hpv, beta),
                B.check_old_bounds(h, hpv, beta),
                B.terai_check(h, d),
            ]
        if entry["cohen_macaulay"]:
            reports.append(B.check_stanley_cm(h))
        if semi:
            reports.append(B.klee_check(h, chi, d))
        if manifold and d % 2 == 1 and d >= 3:
            k = (d - 1) // 2
            rep = B.kuhnel_check(K.n, k, chi)
            rep.extra["neighborly"] = is_neighborly(K, k)
            reports.append(rep)
        if orientable and d >= 4:
            reports.append(B.g2_check(g_vector(h)[2], beta.beta(1), d))
        if algebra:
            try:
                choice = choose_lsop(K, p, lsop_seed)
            except LsopNotFoundError as err:
                entry["quotient"] = {"error": str(err), "tries": err.tries, "exhaustive_search": p**d <= SEARCH_LIMIT}
            else:
                gq = quotient_profile(K, choice.lsop, omega_seed)
                entry["quotient"] = {
                    "lsop": {"method": choice.method, "tries": choice.lsop.tries, "theta": choice.lsop.theta},
                    "omega": gq.omega,
                    "q": gq.q,
                    "socle": gq.s,
                    "kernel": gq.k,
                }
                if buchs:
                    reports += [
                        schenzel_report(gq.q, hpv.hp),
                        socle_report(gq.s, beta, d),
                        kernel_report(gq.k, gq.s, beta, d),
                    ]
                if orientable:
                    reports.append(hpp_report(gq.q, gq.s, hpv.hpp, d))
        entry["bounds"] = [_report_json(r) for r in reports]
        entry["passed"] = all(r.passed for r in reports)
        out["fields"].append(entry)
    out["passed"] = all(e["passed"] for e in out["fields"])
    return out


def analyze_poset(P: SimplicialPoset, fields=(DEFAULT_PRIME,), seed: int = DEFAULT_SEED) -> dict:
    out = {"kind": "poset", "name": P.name, "d": P.rank, "cells": len(P), "seed": seed, "fields": []}
    for p in fields:
        prof = h_prime_poset(P, p)
        buchs = is_buchsbaum_poset(P, p)
        out.setdefault("f", prof.f)
        out.setdefault("h", prof.h)
        reports = [check_main_posets(P, p)]
        if buchs:
            reports.append(B.terai_check(prof.h, prof.d))
        entry = {
            "p": p,
            "betti": prof.betti.entries,
            "buchsbaum": buchs,
            "h_prime": prof.hp,
            "h_double_prime": prof.hpp,
            "bounds": [_report_json(r) for r in reports],
            "passed": all(r.passed for r in reports),
        }
        out["fields"].append(entry)
    out["passed"] = all(e["passed"] for e in out["fields"])
    return out


# -- serialization -------------------------------------------------------------

# integers beyond this magnitude are written as decimal strings
SAFE_INT = 2**53


def _plain(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        v = int(obj)
        return str(v) if abs(v) >= SAFE_INT else v
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else _plain(obj.numerator)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(report) -> str:
    return json.dumps(_plain(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
