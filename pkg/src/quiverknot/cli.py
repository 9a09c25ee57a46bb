"""Command-line frontend.

Subcommands: ``colorings``, ``quiver``, ``shadow``, ``compare``.  Knots
are catalog names or literal PD text; quandles use the grammar
``dihedral:n`` | ``alexander:n:t`` | ``table:PATH``; endomorphism sets
are ``all``, ``auto`` or semicolon-separated ``a,b`` pairs (dihedral
only) meaning f(x) = a*x + b.

Results go to stdout as a single JSON object (``--format text`` for a
human summary, ``--dot FILE`` to write DOT output to a file).  Exit
codes: 0 success, 2 usage or parameter error, 3 data or validation
error.  Identical invocations produce byte-identical JSON apart from the
trailing timing field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .catalog import Catalog, CatalogError, load_catalog
from .cocycle import invariant_multiset, mochizuki, multiset_to_json
from .coloring import count_colorings_dihedral, enumerate_colorings
from .diagram import (
    Diagram,
    ParseError,
    StructuralError,
    build_diagram,
    parse_pd,
)
from .quandle import (
    FiniteQuandle,
    InvalidParameterError,
    QuandleMap,
    enumerate_autos,
    enumerate_homs,
    is_homomorphism,
    make_alexander,
    make_dihedral,
    parse_table_text,
)
from .quiver import (
    cocycle_polynomial,
    coloring_quiver,
    quiver_isomorphic,
    quiver_to_json,
    shadow_cocycle_quiver,
    to_dot,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3


class UsageError(ValueError):
    """Bad parameter values (exit code 2)."""


def parse_quandle_spec(spec: str) -> FiniteQuandle:
    parts = spec.split(":")
    try:
        if parts[0] == "dihedral" and len(parts) == 2:
            return make_dihedral(int(parts[1]))
        if parts[0] == "alexander" and len(parts) == 3:
            return make_alexander(int(parts[1]), int(parts[2]))
        if parts[0] == "table" and len(parts) == 2:
            try:
                with open(parts[1], "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read quandle table {parts[1]!r}: {exc}") from None
            try:
                return parse_table_text(text)
            except (InvalidParameterError, ValueError) as exc:
                raise QuandleDataError(f"bad quandle table {parts[1]!r}: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, (UsageError, QuandleDataError)):
            raise
        raise UsageError(f"bad quandle spec {spec!r}: {exc}") from None
    raise UsageError(
        f"bad quandle spec {spec!r} (grammar: dihedral:n | alexander:n:t | table:PATH)"
    )


class QuandleDataError(ValueError):
    """Table file content failed validation (exit code 3)."""


def parse_endo_spec(spec: str, X: FiniteQuandle) -> list[QuandleMap]:
    if spec == "all":
        return enumerate_homs(X, X)
    if spec == "auto":
        return enumerate_autos(X)
    if not X.is_dihedral:
        raise UsageError("explicit a,b endomorphism lists require a dihedral quandle")
    n = X.order
    endos = []
    for chunk in spec.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise UsageError(f"bad endo pair {chunk!r} (expected 'a,b')")
        try:
            a, b = int(parts[0]) % n, int(parts[1]) % n
        except ValueError:
            raise UsageError(f"bad endo pair {chunk!r} (expected integers)") from None
        f = QuandleMap(n, n, tuple((a * x + b) % n for x in range(n)), affine_form=(a, b))
        if not is_homomorphism(f, X, X):
            raise UsageError(f"map x -> {a}x+{b} is not an endomorphism")
        endos.append(f)
    return endos


def resolve_knot(name_or_pd: str, catalog: Catalog) -> Diagram:
    if name_or_pd in catalog:
        return catalog.diagram(name_or_pd)
    if "(" in name_or_pd or name_or_pd.lstrip().startswith("["):
        return build_diagram(parse_pd(name_or_pd))
    raise UsageError(f"unknown knot {name_or_pd!r} (not a catalog name or PD code)")


def _emit(result: dict, fmt: str, text_lines: list[str], started: float) -> None:
    result["timing"] = {"seconds": round(time.time() - started, 6)}
    if fmt == "text":
        for line in text_lines:
            print(line)
    else:
        print(json.dumps(result))


def cmd_colorings(args, catalog: Catalog) -> int:
    started = time.time()
    d = resolve_knot(args.knot, catalog)
    X = parse_quandle_spec(args.quandle)
    list_mode = args.list
    outputs: dict = {}
    if X.is_dihedral and not list_mode:
        outputs["count"] = count_colorings_dihedral(d, X.order)
        outputs["method"] = "snf"
    else:
        cols = enumerate_colorings(d, X)
        outputs["count"] = len(cols)
        outputs["method"] = "enumeration"
        if list_mode:
            outputs["colorings"] = [c.to_json() for c in cols]
    result = {
        "command": "colorings",
        "parameters": {"knot": args.knot, "quandle": args.quandle,
                       "mode": "list" if list_mode else "count"},
        "outputs": outputs,
    }
    lines = [f"{outputs['count']} colorings ({outputs['method']})"]
    if list_mode:
        lines += [str(c) for c in outputs.get("colorings", [])]
    _emit(result, args.format, lines, started)
    return EXIT_OK


def _build_quiver(args, catalog: Catalog, weighted: bool):
    d = resolve_knot(args.knot, catalog)
    X = parse_quandle_spec(args.quandle)
    S = parse_endo_spec(args.endos, X)
    if not weighted:
        return coloring_quiver(d, X, S)
    if args.cocycle != "mochizuki":
        raise UsageError(f"unknown cocycle {args.cocycle!r} (only 'mochizuki')")
    if not X.is_dihedral:
        raise UsageError("the mochizuki cocycle needs a dihedral:p quandle")
    theta = mochizuki(X.order)
    if not 0 <= args.base < X.order:
        raise UsageError(f"base {args.base} out of range 0..{X.order - 1}")
    return shadow_cocycle_quiver(d, X, S, args.base, theta)


def cmd_quiver(args, catalog: Catalog) -> int:
    started = time.time()
    q = _build_quiver(args, catalog, weighted=False)
    dot = to_dot(q, collapse_parallel=args.collapse_parallel)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot + "\n")
    if args.out == "dot" and not args.dot:
        print(dot)
        return EXIT_OK
    outputs: dict = {"vertices": q.n_vertices, "edges": q.n_edges}
    if args.out == "json":
        outputs["quiver"] = quiver_to_json(q)
    result = {
        "command": "quiver",
        "parameters": {"knot": args.knot, "quandle": args.quandle,
                       "endos": args.endos, "out": args.out},
        "outputs": outputs,
    }
    _emit(result, args.format, [f"{q.n_vertices} vertices, {q.n_edges} edges"], started)
    return EXIT_OK


def cmd_shadow(args, catalog: Catalog) -> int:
    started = time.time()
    q = _build_quiver(args, catalog, weighted=True)
    poly = cocycle_polynomial(q)
    histogram: dict[int, int] = {}
    for w in q.weights:
        histogram[w] = histogram.get(w, 0) + 1
    dot = to_dot(q, collapse_parallel=args.collapse_parallel)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot + "\n")
    if args.out == "dot" and not args.dot:
        print(dot)
        return EXIT_OK
    outputs: dict = {
        "vertices": q.n_vertices,
        "edges": q.n_edges,
        "weight_histogram": [[w, histogram[w]] for w in sorted(histogram)],
        "polynomial": str(poly),
    }
    if args.out == "json":
        outputs["quiver"] = quiver_to_json(q)
    result = {
        "command": "shadow",
        "parameters": {"knot": args.knot, "quandle": args.quandle,
                       "cocycle": args.cocycle, "base": args.base,
                       "endos": args.endos, "out": args.out},
        "outputs": outputs,
    }
    lines = [
        f"{q.n_vertices} vertices, {q.n_edges} edges",
        "weights " + " ".join(f"{w}:{c}" for w, c in outputs["weight_histogram"]),
        f"polynomial {poly}",
    ]
    _emit(result, args.format, lines, started)
    return EXIT_OK


def cmd_compare(args, catalog: Catalog) -> int:
    started = time.time()
    X = parse_quandle_spec(args.quandle)
    S = parse_endo_spec(args.endos, X)
    dA = resolve_knot(args.knotA, catalog)
    dB = resolve_knot(args.knotB, catalog)
    outputs: dict = {}
    if args.weighted:
        if args.cocycle != "mochizuki":
            raise UsageError(f"unknown cocycle {args.cocycle!r} (only 'mochizuki')")
        if not X.is_dihedral:
            raise UsageError("the mochizuki cocycle needs a dihedral:p quandle")
        theta = mochizuki(X.order)
        if not 0 <= args.base < X.order:
            raise UsageError(f"base {args.base} out of range 0..{X.order - 1}")
        qA = shadow_cocycle_quiver(dA, X, S, args.base, theta)
        qB = shadow_cocycle_quiver(dB, X, S, args.base, theta)
        iso, witness = quiver_isomorphic(qA, qB, respect_weights=True)
        mA = invariant_multiset(dA, X, theta)
        mB = invariant_multiset(dB, X, theta)
        outputs["multisets"] = {
            "A": multiset_to_json(mA),
            "B": multiset_to_json(mB),
            "equal": mA == mB,
        }
    else:
        qA = coloring_quiver(dA, X, S)
        qB = coloring_quiver(dB, X, S)
        iso, witness = quiver_isomorphic(qA, qB)
    outputs["counts"] = [qA.n_vertices, qB.n_vertices]
    outputs["isomorphic"] = iso
    outputs["witness"] = list(witness) if witness is not None else None
    result = {
        "command": "compare",
        "parameters": {"knotA": args.knotA, "knotB": args.knotB,
                       "quandle": args.quandle, "endos": args.endos,
                       "weighted": args.weighted},
        "outputs": outputs,
    }
    verdict = "isomorphic" if iso else "NOT isomorphic"
    _emit(result, args.format, [f"{args.knotA} vs {args.knotB}: {verdict}"], started)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverknot",
        description="Quandle coloring quivers and shadow cocycle invariants "
                    "of knots given as PD codes.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("colorings", help="count or list quandle colorings")
    p.add_argument("--knot", required=True, help="catalog name or PD code")
    p.add_argument("--quandle", required=True)
    p.add_argument("--count", action="store_true", help="count only (default)")
    p.add_argument("--list", action="store_true", help="list the colorings")
    common(p)
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("quiver", help="build a quandle coloring quiver")
    p.add_argument("--knot", required=True)
    p.add_argument("--quandle", required=True)
    p.add_argument("--endos", default="all", help="all | auto | 'a,b;a,b;...'")
    p.add_argument("--out", choices=["json", "dot"], default="json")
    p.add_argument("--dot", metavar="FILE", help="write DOT to a file")
    p.add_argument("--collapse-parallel", action="store_true",
                   help="merge parallel edges in DOT output (display only)")
    common(p)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("shadow", help="build a shadow cocycle quiver")
    p.add_argument("--knot", required=True)
    p.add_argument("--quandle", required=True, help="dihedral:p with p an odd prime")
    p.add_argument("--cocycle", default="mochizuki")
    p.add_argument("--base", type=int, default=0, help="label of the unbounded region")
    p.add_argument("--endos", default="all")
    p.add_argument("--out", choices=["json", "dot"], default="json")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--collapse-parallel", action="store_true",
                   help="merge parallel edges in DOT output (display only)")
    common(p)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("compare", help="decide quiver isomorphism of two knots")
    p.add_argument("knotA")
    p.add_argument("knotB")
    p.add_argument("--quandle", required=True)
    p.add_argument("--endos", default="all")
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--cocycle", default="mochizuki")
    p.add_argument("--base", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        catalog = load_catalog()
        return args.func(args, catalog)
    except (UsageError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CatalogError, ParseError, StructuralError, QuandleDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
