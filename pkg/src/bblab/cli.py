"""Command-line front end: ``bblab analyze | construct | verify``.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import DEFAULT_SEED, analyze_complex, analyze_poset, dumps
from .complex import ComplexError, SimplicialComplex, from_facets
from .constructions import (
    CORPUS,
    corpus_complex,
    cyclic_polytope_boundary,
    handle_4,
    handle_sum,
    simplex_boundary,
    small_manifold,
    stacked_sphere,
)
from .facering import DEFAULT_PRIME
from .linalg import as_field
from .posets import InvalidPosetError, SimplicialPoset, construct_x
from .suites import SUITES

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def complex_to_json(K: SimplicialComplex) -> dict:
    out = {"facets": [list(K.original(F)) for F in K.facets]}
    if K.name:
        out["name"] = K.name
    return out


def parse_document(text: str, origin: str = "<input>"):
    """Parse a complex or poset JSON document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"{origin}: line {err.lineno} column {err.colno} (offset {err.pos}): {err.msg}") from None
    if not isinstance(obj, dict):
        raise InputError(f"{origin}: expected a JSON object")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError(f"{origin}: 'name' must be a string")
    try:
        if "facets" in obj:
            facets = obj["facets"]
            if not isinstance(facets, list) or not all(isinstance(F, list) for F in facets):
                raise InputError(f"{origin}: 'facets' must be a list of integer lists")
            K = from_facets(facets, name)
            if K.is_void:
                raise InputError(f"{origin}: the void complex has nothing to analyze")
            return K
        if "cells" in obj:
            cells = obj["cells"]
            if not isinstance(cells, list):
                raise InputError(f"{origin}: 'cells' must be a list")
            for i, c in enumerate(cells):
                ok = (
                    isinstance(c, dict)
                    and isinstance(c.get("id"), str)
                    and isinstance(c.get("rank"), int)
                    and isinstance(c.get("boundary", []), list)
                )
                if not ok:
                    raise InputError(f"{origin}: cell {i} needs string 'id', integer 'rank', list 'boundary'")
            return SimplicialPoset(cells, name)
    except (ComplexError, InvalidPosetError) as err:
        raise InputError(f"{origin}: {err}") from None
    raise InputError(f"{origin}: expected a 'facets' or 'cells' key")


def load_target(target: str):
    if target in CORPUS:
        return corpus_complex(target)
    path = Path(target)
    if not path.exists():
        raise InputError(f"{target}: neither a corpus name nor a file")
    return parse_document(path.read_text(encoding="utf-8"), target)


def _fields(values) -> list[int]:
    out = []
    for v in values or [DEFAULT_PRIME]:
        try:
            out.append(as_field(v).p)
        except (ValueError, TypeError) as err:
            raise InputError(str(err)) from None
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _summary(report: dict) -> str:
    lines = [f"{report.get('name') or report['kind']}: f={list(report['f'])} h={list(report['h'])}"]
    for e in report["fields"]:
        lines.append(f"  p={e['p']} betti={list(e['betti'])} buchsbaum={e['buchsbaum']} h'={list(e['h_prime'])}")
        q = e.get("quotient")
        if q and "q" in q:
            lines.append(f"    q={list(q['q'])} socle={list(q['socle'])} kernel={list(q['kernel'])}")
        elif q:
            lines.append(f"    quotient unavailable: {q['error']}")
        for b in e["bounds"]:
            lines.append(f"    {b['name']}: {'pass' if b['passed'] else 'FAIL'}" + (f" tight={b['tight']}" if b["tight"] else ""))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    obj = load_target(args.target)
    fields = _fields(args.field)
    if isinstance(obj, SimplicialPoset):
        report = analyze_poset(obj, fields, args.seed)
    else:
        report = analyze_complex(obj, fields, args.seed, algebra=not args.no_algebra)
    for e in report["fields"]:
        q = e.get("quotient")
        if q and "error" in q:
            print(f"warning: {q['error']}", file=sys.stderr)
    _emit(dumps(report) if args.format == "json" else _summary(report), args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _build(family: str, params: list[str]):
    def ints(k: int) -> list[int]:
        if len(params) != k:
            raise InputError(f"{family} takes {k} integer parameter(s)")
        try:
            return [int(x) for x in params]
        except ValueError:
            raise InputError(f"{family}: parameters must be integers") from None

    try:
        if family == "simplex":
            return simplex_boundary(*ints(1))
        if family == "cyclic":
            return cyclic_polytope_boundary(*ints(2))
        if family == "stacked":
            return stacked_sphere(*ints(2))
        if family == "handle":
            (m,) = ints(1) if params else (1,)
            return handle_4() if m == 1 else handle_sum(m)
        if family == "small":
            if len(params) != 1:
                raise InputError("small takes a manifold name")
            return small_manifold(params[0])
        if family == "x-poset":
            return construct_x(*ints(2))
    except (ValueError, ComplexError) as err:
        if isinstance(err, InputError):
            raise
        raise InputError(f"{family}: {err}") from None
    raise InputError(f"unknown family {family!r}")


def cmd_construct(args) -> int:
    obj = _build(args.family, args.params)
    doc = obj.to_json() if isinstance(obj, SimplicialPoset) else complex_to_json(obj)
    _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    kwargs = {"seed": args.seed}
    if args.field:
        kwargs["p"] = _fields(args.field)[0]
    lines = suite(**kwargs)
    ok = all(line.passed for line in lines)
    if args.format == "json":
        text = dumps({"suite": args.suite, "passed": ok,
                      "lines": [{"subject": l.subject, "passed": l.passed, "detail": l.detail} for l in lines]})
    else:
        text = "".join(f"{'pass' if l.passed else 'FAIL'}  {l.subject}  {l.detail}\n" for l in lines)
        text += f"{args.suite}: {'all pass' if ok else 'FAILED'}\n"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bblab", description="Face numbers, homology and face-ring invariants of Buchsbaum complexes and posets.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--field", type=int, action="append", metavar="P", help="prime field (repeatable; default 32003)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for all randomness (default {DEFAULT_SEED})")
        p.add_argument("--format", choices=["json", "text"], default="text")
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    a = sub.add_parser("analyze", help="profile a corpus entry or a JSON file")
    a.add_argument("target", help="corpus name or path to a complex/poset JSON file")
    a.add_argument("--no-algebra", action="store_true", help="skip the face-ring quotient computation")
    common(a)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="write a built-in construction as JSON")
    c.add_argument("family", choices=["simplex", "cyclic", "stacked", "handle", "small", "x-poset"])
    c.add_argument("params", nargs="*")
    c.add_argument("--out", metavar="PATH")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run a named verification suite over the corpus")
    v.add_argument("suite", choices=sorted(SUITES))
    common(v)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
