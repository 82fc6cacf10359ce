"""Command-line front end.

Exit codes: 0 success, 1 domain or schema error, 2 usage error,
3 no equivalence criterion available.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, equivalence, render, tables
from .errors import DomainError, MissingSlots
from .invariants import InvariantProfile
from .tits_index import TitsIndex, validate

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_UNAVAILABLE = 0, 1, 2, 3


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_indexes(path):
    """One index document, or a list of them."""
    try:
        doc = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise DomainError(f"index: invalid JSON: {exc}") from None
    docs = doc if isinstance(doc, list) else [doc]
    return [TitsIndex.from_json(d) for d in docs], isinstance(doc, list)


def _print_json(doc):
    print(json.dumps(doc, indent=2, ensure_ascii=False))


def cmd_enumerate(args):
    family = catalog.parse_family(args.type, args.rank)
    indexes = catalog.enumerate_indexes(family, p=args.prime, rules=args.rules)
    if args.format == "json":
        _print_json([ix.to_json() for ix in indexes])
    else:
        print("\n\n".join(f"{ix}\n{render.render_text(ix, args.ascii_only)}" for ix in indexes))
    return EXIT_OK


def cmd_validate(args):
    indexes, _ = _load_indexes(args.file)
    status = EXIT_OK
    for ix in indexes:
        problems = validate(ix)
        if problems:
            status = EXIT_DOMAIN
            for v in problems:
                print(f"{ix.diagram.name}: {v.message}", file=sys.stderr)
            continue
        qtype = catalog.family_of(ix) if ix.action == _standard(ix) else None
        primes = []
        if qtype is not None:
            primes = [p for p in sorted(catalog.torsion_primes(qtype.type_label, qtype.rank, args.rules))
                      if catalog.admissible(ix, p, args.rules)]
        _print_json({"valid": True, "index": str(ix), "admissible_primes": primes})
    return status


def _standard(ix):
    try:
        return catalog.family_of(ix).action()
    except DomainError:
        return None


def cmd_render(args):
    indexes, _ = _load_indexes(args.file)
    for ix in indexes:
        problems = validate(ix)
        if problems:
            raise DomainError("; ".join(v.message for v in problems))
    out = []
    for ix in indexes:
        if args.format == "text":
            out.append(render.render_text(ix, args.ascii_only) + "\n")
        elif args.format == "svg":
            out.append(render.render_svg(ix))
        else:
            out.append(render.render_tikz(ix))
    sys.stdout.write("\n".join(out))
    return EXIT_OK


def cmd_equiv(args):
    p1 = InvariantProfile.loads(_read(args.profile1))
    p2 = InvariantProfile.loads(_read(args.profile2))
    if args.all:
        verdict = equivalence.motivic_equivalent(p1, p2)
    else:
        verdict = equivalence.motivic_equivalent_mod_p(p1, p2, args.prime)
    _print_json(verdict.to_json())
    if verdict.verdict == equivalence.UNAVAILABLE:
        print(equivalence.UNAVAILABLE, file=sys.stderr)
        return EXIT_UNAVAILABLE
    return EXIT_OK


def cmd_tables(args):
    for path in tables.write_tables(args.out, args.rules):
        print(path)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="titsindex", description="Tits p-indexes of simple algebraic groups.")
    parser.add_argument("--rules", help="rules table (default: $TITS_RULES or the packaged table)")
    sub = parser.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list the Tits p-indexes of a quasi-split type")
    e.add_argument("--type", required=True, help="e.g. E8, F4, A, 2A, 1D, 3D4, 2E6")
    e.add_argument("--rank", type=int)
    e.add_argument("--prime", type=int, required=True)
    e.add_argument("--format", choices=("json", "text"), default="json")
    e.add_argument("--ascii-only", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("validate", help="check an index document ('-' reads stdin)")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("render", help="draw an index document")
    r.add_argument("file")
    r.add_argument("--format", choices=("text", "svg", "tikz"), default="text")
    r.add_argument("--ascii-only", action="store_true")
    r.set_defaults(func=cmd_render)

    q = sub.add_parser("equiv", help="compare two invariant profiles")
    q.add_argument("profile1")
    q.add_argument("profile2")
    which = q.add_mutually_exclusive_group(required=True)
    which.add_argument("--prime", type=int)
    which.add_argument("--all", action="store_true")
    q.set_defaults(func=cmd_equiv)

    t = sub.add_parser("tables", help="write the golden table files")
    t.add_argument("--out", required=True)
    t.set_defaults(func=cmd_tables)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MissingSlots as exc:
        print(f"error: {exc} (missing: {', '.join(exc.slots)})", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
