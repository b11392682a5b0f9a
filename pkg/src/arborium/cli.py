"""Command-line front end.

Commands:
    compute       invariants of one arbor (--arbor TEXT or --tn N)
    verify        expand the generating series and compare against recursions
    oracle-check  recursion-vs-brute-force comparisons on a seeded corpus
    tn            print the canonical text of the fan arbor t_n

Exit codes: 0 success, 1 verification or oracle disagreement, 2 usage or
parse errors.  The environment variable ARBORIUM_ORDER overrides the
default series order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import MultiPoly, poly_to_terms
from .arbor import ArborError, make_tn, parse_arbor, serialize_arbor
from .crosscheck import corpus_check, cross_check
from .invariants import INVARIANT_NAMES, compute_invariants
from .verify import DEFAULT_ORDER, THEOREMS, VERIFIERS


def _default_order() -> int:
    raw = os.environ.get("ARBORIUM_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        order = int(raw)
    except ValueError:
        raise SystemExit(f"ARBORIUM_ORDER must be an integer, got {raw!r}")
    return order


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arborium",
        description="Exact poset and polytope invariants of arbors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute invariants of one arbor")
    group = p_compute.add_mutually_exclusive_group(required=True)
    group.add_argument("--arbor", help="arbor text, e.g. '{1}({2},{3})'")
    group.add_argument("--tn", type=int, metavar="N", help="use the fan arbor t_N")
    p_compute.add_argument(
        "--invariant", action="append", metavar="NAME",
        help=f"one of {', '.join(INVARIANT_NAMES)} (repeatable or comma separated; "
             "default: all)")
    p_compute.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="verify the generating series")
    p_verify.add_argument("--theorem", action="append", choices=THEOREMS,
                          help="series to check (repeatable; default: all)")
    p_verify.add_argument("--order", type=int, default=None,
                          help=f"series truncation order (default {DEFAULT_ORDER}, "
                               "or ARBORIUM_ORDER)")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_oracle = sub.add_parser("oracle-check",
                              help="compare recursions against brute force")
    p_oracle.add_argument("--arbor", help="check a single arbor instead of the corpus")
    p_oracle.add_argument("--seed", type=int, default=20260809,
                          help="corpus seed (default 20260809)")
    p_oracle.add_argument("--per-size", type=int, default=4,
                          help="corpus arbors per size 1..6 (default 4)")
    p_oracle.add_argument("--format", choices=("text", "json"), default="text")

    p_tn = sub.add_parser("tn", help="print the canonical text of t_N")
    p_tn.add_argument("n", type=int)

    return parser


def _invariant_names(raw) -> list:
    if not raw:
        return list(INVARIANT_NAMES)
    names = []
    for chunk in raw:
        names.extend(x.strip() for x in chunk.split(",") if x.strip())
    bad = [x for x in names if x not in INVARIANT_NAMES]
    if bad:
        raise ValueError(f"unknown invariant(s): {', '.join(bad)}")
    return names


def _render_value(value):
    if isinstance(value, MultiPoly):
        return str(value), {"text": str(value), "terms": poly_to_terms(value)}
    return str(value), {"text": str(value), "value": str(value)}


def cmd_compute(args) -> int:
    try:
        t = parse_arbor(args.arbor) if args.arbor else make_tn(args.tn)
        names = _invariant_names(args.invariant)
    except (ArborError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    bundle = compute_invariants(t, names)
    values = {name: getattr(bundle, name) for name in names}
    if args.format == "json":
        payload = {"arbor": serialize_arbor(t), "size": t.size, "invariants": {}}
        for name in names:
            _, as_json = _render_value(values[name])
            payload["invariants"][name] = as_json
        print(json.dumps(payload, indent=2))
    elif len(names) == 1:
        text, _ = _render_value(values[names[0]])
        print(text)
    else:
        for name in names:
            text, _ = _render_value(values[name])
            print(f"{name}: {text}")
    return 0


def cmd_verify(args) -> int:
    order = args.order if args.order is not None else _default_order()
    if order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return 2
    theorems = args.theorem or list(THEOREMS)
    reports = [VERIFIERS[name](order) for name in theorems]
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.render_text())
    return 0 if all(r.overall for r in reports) else 1


def cmd_oracle_check(args) -> int:
    if args.arbor:
        try:
            outcomes = cross_check(parse_arbor(args.arbor))
        except (ArborError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        print(f"corpus: seed={args.seed} per_size={args.per_size} sizes 1..6")
        outcomes = corpus_check(args.seed, per_size=args.per_size)
    if args.format == "json":
        print(json.dumps([
            {"arbor": o.arbor, "check": o.name, "passed": o.passed,
             **({"detail": o.detail} if o.detail else {})}
            for o in outcomes], indent=2))
    else:
        by_arbor: dict = {}
        for o in outcomes:
            by_arbor.setdefault(o.arbor, []).append(o)
        for text, checks in by_arbor.items():
            ok = all(c.passed for c in checks)
            print(f"{'pass' if ok else 'FAIL'}  {text}")
            for c in checks:
                if not c.passed:
                    print(f"      {c.name}: {c.detail}")
    return 0 if all(o.passed for o in outcomes) else 1


def cmd_tn(args) -> int:
    try:
        print(serialize_arbor(make_tn(args.n)))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "compute": cmd_compute,
        "verify": cmd_verify,
        "oracle-check": cmd_oracle_check,
        "tn": cmd_tn,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
