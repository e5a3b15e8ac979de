"""``goldenico`` command line.

Exit status: 0 success, 1 domain-negative answer (golden singular, not a
figure, singular k-subsets found), 2 usage, parse or internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import analysis, assignment, neo_riemannian, piece, render
from .assignment import ExceptionalType, LabelingError, label_types, search_exceptional
from .pitch import ToneNameError, names, parse_tones

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _type(value: str) -> ExceptionalType:
    try:
        return ExceptionalType.coerce(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tones(tokens: Sequence[str]) -> tuple[int, ...]:
    # allow "C,E,G" as well as "C E G"
    flat = [t for tok in tokens for t in tok.replace(",", " ").split()]
    pcs = parse_tones(flat)
    if len(set(pcs)) != len(pcs):
        raise UsageError(f"repeated tone in {' '.join(flat)}")
    return pcs


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def cmd_derive(args) -> int:
    start = time.perf_counter()
    classes = search_exceptional()
    structures = label_types(classes)
    elapsed = time.perf_counter() - start
    if args.out:
        Path(args.out).write_text(assignment.structures_json(structures), encoding="utf-8")
    if args.json:
        sys.stdout.write(assignment.structures_json(structures))
    else:
        print(f"{len(classes)} exceptional classes in {elapsed:.2f} s")
        for c in classes:
            print(f"  {len(c.members)} assignments, {c.rotation_classes} rotation classes")
        for t in ExceptionalType:
            print(assignment.describe(structures[t]))
    return EXIT_OK if len(structures) == 4 and len(classes) == 4 else EXIT_ERROR


def cmd_classify(args) -> int:
    pcs = _tones(args.tones)
    kind = assignment.chord_figure_kind(assignment.structure_for(args.type), pcs)
    label = kind.value if kind else "none"
    if args.json:
        sys.stdout.write(_dump({"type": args.type.label, "pcs": sorted(set(pcs)), "figure": label}))
    else:
        print(f"{names(pcs)} on {args.type.label}: {label}")
    return EXIT_OK if kind else EXIT_NEGATIVE


def cmd_decompose(args) -> int:
    pcs = _tones(args.tones)
    ds = analysis.golden_decompositions(assignment.structure_for(args.type), pcs)
    if args.json:
        doc = analysis.decompositions_json({names(pcs): ds})
        doc["type"] = args.type.label
        sys.stdout.write(_dump(doc))
    elif not ds:
        print(f"{names(pcs)}: golden singular on {args.type.label}")
    else:
        print(f"{names(pcs)} on {args.type.label}: {len(ds)} minimum decomposition(s)")
        for d in ds:
            print(f"  [{d.shape.label}] {d}")
    return EXIT_OK if ds else EXIT_NEGATIVE


def cmd_sevenths(args) -> int:
    table = analysis.seventh_chord_table()
    if args.json:
        sys.stdout.write(analysis.seventh_table_json(table))
    else:
        sys.stdout.write(analysis.seventh_table_text(table))
        if args.verbose:
            for t, row in table.items():
                for chord, ds in row.items():
                    for d in ds:
                        print(f"{t.label} {chord}: {d}")
    return EXIT_OK


def cmd_scan(args) -> int:
    types = [args.type] if args.type else list(ExceptionalType)
    found = {}
    for t in types:
        start = time.perf_counter()
        found[t] = analysis.singular_k_subsets(assignment.structure_for(t), args.k)
        if not args.json:
            print(f"{t.label}: {len(found[t])} golden singular {args.k}-subsets "
                  f"({time.perf_counter() - start:.2f} s)")
            for combo in found[t][: args.show]:
                print(f"  {names(combo)}")
    if args.json:
        sys.stdout.write(_dump({t.label: [list(c) for c in v] for t, v in found.items()}))
    return EXIT_NEGATIVE if any(found.values()) else EXIT_OK


def cmd_neoriemann(args) -> int:
    types = [args.type] if args.type else list(ExceptionalType)
    if args.json:
        doc = json.loads(neo_riemannian.mode_table_json(types))
        for t in types:
            rep = neo_riemannian.triad_reachability_graph(t)
            doc[t.label] = {"modes": doc[t.label], "connected": rep.connected}
        sys.stdout.write(_dump(doc))
    else:
        sys.stdout.write(neo_riemannian.mode_table_text(types))
        for t in types:
            rep = neo_riemannian.triad_reachability_graph(t)
            print(f"{t.label}: {rep.components} component(s) over {rep.nodes} triads")
    return EXIT_OK


def cmd_analyze(args) -> int:
    if args.bwv846 == bool(args.path):
        raise UsageError("give a corpus path or --bwv846, not both")
    p = piece.bwv846() if args.bwv846 else piece.load_piece(args.path)
    try:
        measures, summary = piece.analyze_piece(p, args.type, prefer_rectangles=args.prefer_rectangles)
    except piece.AnalysisError as exc:
        print(f"cannot analyse {p.title}: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.json:
        _emit(piece.analysis_json(p, measures, summary, args.type.label), args.out)
    else:
        _emit(f"{p.title} on type {args.type.label}\n" + piece.analysis_text(measures, summary), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    pcs = _tones(args.tones)
    st = assignment.structure_for(args.type)
    ds = analysis.golden_decompositions(st, pcs)
    if not ds:
        print(f"{names(pcs)}: golden singular on {args.type.label}", file=sys.stderr)
        return EXIT_NEGATIVE
    if not 0 <= args.index < len(ds):
        raise UsageError(f"--index must lie in 0..{len(ds) - 1}")
    svg = render.render_svg(st, ds[args.index], f"{names(pcs)} on type {args.type.label}")
    Path(args.output).write_text(svg, encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="goldenico", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def typed(p, required=True):
        p.add_argument("--type", "-t", type=_type, required=required, help="exceptional type 1-4")

    p = sub.add_parser("derive", help="search and label the exceptional icosahedra")
    p.add_argument("--out", help="write the structures as JSON to this file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("classify", help="is a 3- or 4-tone chord a golden figure")
    typed(p)
    p.add_argument("tones", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="all minimum golden decompositions of a harmony")
    typed(p)
    p.add_argument("tones", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sevenths", help="tertian seventh chords on every type")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_sevenths)

    p = sub.add_parser("scan", help="golden singular k-subsets of the twelve tones")
    typed(p, required=False)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--show", type=int, default=10, help="list at most this many per type")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("neoriemann", help="P/R neighbourhood modes and reachability")
    typed(p, required=False)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_neoriemann)

    p = sub.add_parser("analyze", help="golden analysis of a piece")
    p.add_argument("path", nargs="?")
    p.add_argument("--bwv846", action="store_true", help="use the embedded C major prelude")
    typed(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", "-o")
    p.add_argument("--prefer-rectangles", action="store_true",
                   help="use a golden rectangle in a measure whenever a minimum cover has one")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("render", help="SVG of a decomposition on the icosahedron")
    typed(p)
    p.add_argument("tones", nargs="+")
    p.add_argument("--output", "-o", required=True)
    p.add_argument("--index", type=int, default=0, help="which minimum decomposition to draw")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ToneNameError, analysis.ArityError, piece.PieceParseError,
            LabelingError, OSError) as exc:
        print(f"goldenico {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # internal failure, still exit 2
        print(f"goldenico {args.command}: internal error: {exc!r}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
