"""Command-line interface.

    knotsurgery alex "B2: s1 s1 s1"
    knotsurgery surgery sw.txt trefoil -o out.txt
    knotsurgery compare a.txt b.txt
    knotsurgery collisions knots.tsv --with-mirrors
    knotsurgery concordance sw.txt trefoil --kind product -o out.txt

Exit status: 0 on success (including either comparison verdict), 1 for bad
input, 2 when an internal self-check fails.
"""
from __future__ import annotations

import argparse
import sys
import warnings
from collections import defaultdict

from .alexander import AlexanderPolynomial, alexander
from .braid import Braid, parse_braid
from .errors import InexactDivisionError, InputError, InternalConsistencyError
from .swcalc import Concordance, concordance_surgery, knot_surgery, sw_equal
from .table import KnotTable, bundled_table, load_table
from . import swio


def resolve_knot(text: str, table_path: str | None = None) -> Braid:
    """A braid string (``B<n>: ...``) or the name of a table entry."""
    if text.lstrip().startswith("B") and ":" in text:
        return parse_braid(text)
    table = load_table(table_path) if table_path else bundled_table()
    return table.get(text)


def collision_groups(table: KnotTable) -> list[tuple[AlexanderPolynomial, list[str]]]:
    """Groups of two or more table entries sharing an Alexander polynomial."""
    by_delta: dict[AlexanderPolynomial, list[str]] = defaultdict(list)
    for name, b in table:
        by_delta[alexander(b)].append(name)
    groups = [(d, names) for d, names in by_delta.items() if len(names) >= 2]
    groups.sort(key=lambda g: str(g[0]))
    return groups


def cmd_alex(args) -> int:
    print(alexander(parse_braid(args.braid)))
    return 0


def cmd_surgery(args) -> int:
    data = swio.load(args.sw_file)
    data.sw.validate()
    torus = data.require_torus()
    delta = alexander(resolve_knot(args.knot, args.table))
    result = data.with_sw(knot_surgery(data.sw, torus, delta))
    swio.dump(result, args.output)
    print(f"delta: {delta}")
    print(f"support: {len(data.sw)} -> {len(result.sw)}")
    return 0


def cmd_compare(args) -> int:
    a = swio.load(args.sw_file_a)
    b = swio.load(args.sw_file_b)
    print("INDISTINGUISHABLE" if sw_equal(a.sw, b.sw) else "DISTINCT")
    return 0


def cmd_collisions(args) -> int:
    table = load_table(args.table_file)
    if args.with_mirrors:
        table = table.with_mirrors()
    for delta, names in collision_groups(table):
        print(f"{delta}: {', '.join(names)}")
    return 0


def cmd_concordance(args) -> int:
    data = swio.load(args.sw_file)
    data.sw.validate()
    torus = data.require_torus()
    knot = resolve_knot(args.knot, args.table)
    out = concordance_surgery(data.sw, torus, knot, Concordance(args.kind))
    swio.dump(data.with_sw(out), args.output)
    print("UNCHANGED" if sw_equal(out, data.sw) else "CHANGED")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotsurgery",
        description="Alexander polynomials of braid closures and knot surgery on SW data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alex", help="print the normalized Alexander polynomial of a braid closure")
    p.add_argument("braid", help='braid word, e.g. "B2: s1 s1 s1"')
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("surgery", help="apply knot surgery to an SW data file")
    p.add_argument("sw_file")
    p.add_argument("knot", help="braid word or knot table name")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--table", help="knot table used to resolve names (default: bundled)")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("compare", help="compare two SW data files")
    p.add_argument("sw_file_a")
    p.add_argument("sw_file_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("collisions", help="group table knots with equal Alexander polynomials")
    p.add_argument("table_file")
    p.add_argument("--with-mirrors", action="store_true",
                   help="add the reversed mirror of every entry before grouping")
    p.set_defaults(func=cmd_collisions)

    p = sub.add_parser("concordance", help="surgery along a self-concordance of K # -K")
    p.add_argument("sw_file")
    p.add_argument("knot", help="braid word or knot table name")
    p.add_argument("--kind", required=True, choices=[c.value for c in Concordance])
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--table", help="knot table used to resolve names (default: bundled)")
    p.set_defaults(func=cmd_concordance)
    return parser


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings():
        warnings.showwarning = _show_warning
        try:
            return args.func(args)
        except (InputError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except (InternalConsistencyError, InexactDivisionError) as exc:
            print(f"internal error: {exc}", file=sys.stderr)
            return 2


if __name__ == "__main__":
    sys.exit(main())
