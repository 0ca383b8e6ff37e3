"""Command-line interface.

Verbs:
    reduce          reduce a word given in text form
    compose         compose two automorphisms (second acts first)
    invert          invert an automorphism
    coset-product   block-stabilized product of two automorphisms
    star-product    conjugation-class variant of the product
    tuple-product   coordinatewise product of two automorphism tuples
    rep-matrix      exact averaged-action matrix over a finite group
    verify          seeded self-check suites

Automorphism arguments accept a file path, an inline JSON object, or ``-``
for stdin.  Output is compact JSON by default; ``--text`` switches to a
human-readable rendering.  Exit codes: 0 success, 1 domain error (bad input,
support violation, failed verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .automorphisms import (
    automorphism_from_dict,
    automorphism_to_dict,
    compose,
    invert,
)
from .cosets import coset_product, star_product, tuple_product
from .groups import Subgroup, builtin_group, group_from_dict
from .repengine import compress_to_invariants, markov_matrix
from .verify import SUITES, run_suites
from .words import format_word, parse_word


def _read_payload(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    stripped = spec.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return spec
    with open(spec, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_automorphism(spec: str):
    return automorphism_from_dict(json.loads(_read_payload(spec)))


def _load_automorphism_list(spec: str):
    data = json.loads(_read_payload(spec))
    if not isinstance(data, list):
        raise ValueError("expected a JSON array of automorphisms")
    return [automorphism_from_dict(item) for item in data]


def _load_group(spec: str):
    stripped = spec.lstrip()
    if stripped.startswith("{") or spec == "-" or os.path.exists(spec):
        return group_from_dict(json.loads(_read_payload(spec)))
    return builtin_group(spec)


def _emit(doc) -> int:
    print(json.dumps(doc, separators=(",", ":")))
    return 0


def _auto_text(a) -> str:
    images = a.fwd.images
    if not images:
        return "identity"
    return "\n".join(f"x{k} -> {format_word(w)}" for k, w in sorted(images.items()))


def _matrix_text(rows: list[list[str]]) -> str:
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    return "\n".join(" ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows)


def _cmd_reduce(args) -> int:
    word = parse_word(args.word)
    if args.text:
        print(format_word(word))
        return 0
    return _emit(format_word(word))


def _cmd_compose(args) -> int:
    result = compose(_load_automorphism(args.g), _load_automorphism(args.h))
    if args.text:
        print(_auto_text(result))
        return 0
    return _emit(automorphism_to_dict(result))


def _cmd_invert(args) -> int:
    result = invert(_load_automorphism(args.g))
    if args.text:
        print(_auto_text(result))
        return 0
    return _emit(automorphism_to_dict(result))


def _cmd_coset_product(args) -> int:
    prod = coset_product(args.m, _load_automorphism(args.g), _load_automorphism(args.h))
    if args.text:
        print(f"m={prod.m} N={prod.block}")
        print(_auto_text(prod.rep))
        return 0
    return _emit({"m": prod.m, "N": prod.block, "rep": automorphism_to_dict(prod.rep)})


def _cmd_star_product(args) -> int:
    prod = star_product(args.m, _load_automorphism(args.g), _load_automorphism(args.h))
    if args.text:
        print(f"m={prod.m} N={prod.block}")
        print(_auto_text(prod.rep))
        return 0
    return _emit({"m": prod.m, "N": prod.block, "rep": automorphism_to_dict(prod.rep)})


def _cmd_tuple_product(args) -> int:
    prod = tuple_product(args.m, _load_automorphism_list(args.gs), _load_automorphism_list(args.hs))
    if args.text:
        print(f"m={prod.m} N={prod.block}")
        for i, rep in enumerate(prod.reps, start=1):
            print(f"component {i}:")
            print(_auto_text(rep))
        return 0
    return _emit(
        {
            "m": prod.m,
            "N": prod.block,
            "reps": [automorphism_to_dict(rep) for rep in prod.reps],
        }
    )


def _resolve_max_points(args):
    if args.max_points is not None:
        return args.max_points
    env = os.environ.get("COSET_MAX_POINTS")
    return int(env) if env else None


def _cmd_rep_matrix(args) -> int:
    group = _load_group(args.group)
    g = _load_automorphism(args.g)
    max_points = _resolve_max_points(args)
    matrix = markov_matrix(group, g, args.m, truncation=args.truncation, max_points=max_points)
    if args.u is not None:
        members = [int(x) for x in args.u.split(",") if x.strip() != ""]
        matrix = compress_to_invariants(
            group, Subgroup(group, members), args.m, matrix, max_points=max_points
        )
    rows = matrix.to_strings()
    if args.text:
        print(_matrix_text(rows))
        return 0
    return _emit(rows)


def _cmd_verify(args) -> int:
    results = run_suites(args.suite, seed=args.seed, max_points=_resolve_max_points(args))
    for res in results:
        mark = "ok" if res.passed else "FAIL"
        print(f"{mark:4s} {res.name} ({res.detail})")
    passed = sum(1 for r in results if r.passed)
    print(f"passed {passed}/{len(results)}")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autcosets",
        description="Block-stabilized products of free-group automorphisms "
        "and their exact matrix representations over finite groups.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("reduce", help="freely reduce a word like 'x1 x2^-1 x2'")
    p.add_argument("word")
    p.add_argument("--text", action="store_true", help="plain text instead of JSON")
    p.set_defaults(func=_cmd_reduce)

    for name, fn, help_text in (
        ("compose", _cmd_compose, "compose two automorphisms (second acts first)"),
        ("invert", _cmd_invert, "invert an automorphism"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--g", required=True, help="automorphism: path, inline JSON, or -")
        if name == "compose":
            p.add_argument("--h", required=True, help="automorphism applied first")
        p.add_argument("--text", action="store_true")
        p.set_defaults(func=fn)

    for name, fn in (("coset-product", _cmd_coset_product), ("star-product", _cmd_star_product)):
        p = sub.add_parser(name, help=f"{name.replace('-', ' ')} of two automorphisms")
        p.add_argument("--m", type=int, required=True, help="size of the fixed base block")
        p.add_argument("--g", required=True)
        p.add_argument("--h", required=True)
        p.add_argument("--text", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("tuple-product", help="coordinatewise product of automorphism tuples")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--gs", required=True, help="JSON array of automorphisms: path, inline, or -")
    p.add_argument("--hs", required=True)
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_tuple_product)

    p = sub.add_parser("rep-matrix", help="exact averaged-action matrix over a finite group")
    p.add_argument("--group", required=True, help="builtin name (c<n>, s3, d8, q8) or group JSON")
    p.add_argument("--m", type=int, required=True, help="number of retained coordinates")
    p.add_argument("--g", required=True)
    p.add_argument("--u", help="comma-separated subgroup elements; compress onto orbit averages")
    p.add_argument("--truncation", type=int, help="evaluate over K^truncation instead of the minimum")
    p.add_argument("--max-points", type=int, dest="max_points", help="enumeration budget override")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_rep_matrix)

    p = sub.add_parser("verify", help="run seeded self-check suites")
    p.add_argument("--suite", default="all", choices=SUITES + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-points", type=int, dest="max_points")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
