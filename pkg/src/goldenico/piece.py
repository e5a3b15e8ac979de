"""Measure-by-measure golden analysis of a piece.

Corpus text format, one measure per line::

    # comment
    12: C# E G Bb

Each measure gets one of its minimum golden decompositions.  The choice is
made globally so that the piece uses as few distinct combination shapes as
possible; ties go to the smallest shape set in canonical shape order, then per
measure to the first decomposition in pitch-content order, read relative
to the measure so that whole-tone transposition does not change the choice.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .analysis import GoldenDecomposition, Shape, golden_decompositions
from .assignment import ExceptionalType, GoldenStructure, structure_for
from .pitch import ToneNameError, names, parse_tone


class PieceParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class AnalysisError(RuntimeError):
    def __init__(self, message: str, measure: Optional[int] = None):
        self.measure = measure
        super().__init__(message)


@dataclass(frozen=True)
class Piece:
    title: str
    measures: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self):
        numbers = [n for n, _ in self.measures]
        if any(b <= a for a, b in zip(numbers, numbers[1:])):
            raise PieceParseError(f"measure numbers must increase strictly: {numbers}")
        for n, pcs in self.measures:
            if len(pcs) < 3:
                raise PieceParseError(f"measure {n} has fewer than 3 tones")

    def measure(self, number: int) -> frozenset[int]:
        for n, pcs in self.measures:
            if n == number:
                return pcs
        raise KeyError(number)

    def transposed(self, interval: int) -> "Piece":
        return Piece(
            self.title,
            tuple((n, frozenset((p + interval) % 12 for p in pcs)) for n, pcs in self.measures),
        )


def parse_piece(document: str, title: str = "untitled") -> Piece:
    measures = []
    seen: set[int] = set()
    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise PieceParseError("expected '<measure>: <tones>'", lineno)
        try:
            number = int(head)
        except ValueError:
            raise PieceParseError(f"bad measure number {head!r}", lineno) from None
        if number in seen:
            raise PieceParseError(f"measure {number} listed twice", lineno)
        seen.add(number)
        tokens = body.split()
        if not tokens:
            raise PieceParseError(f"measure {number} is empty", lineno)
        try:
            pcs = [parse_tone(t) for t in tokens]
        except ToneNameError as exc:
            raise PieceParseError(f"measure {number}: {exc}", lineno) from None
        if len(set(pcs)) != len(pcs):
            raise PieceParseError(f"measure {number} repeats a tone", lineno)
        if len(pcs) < 3:
            raise PieceParseError(f"measure {number} has fewer than 3 tones", lineno)
        measures.append((number, frozenset(pcs)))
    if not measures:
        raise PieceParseError("no measures found")
    return Piece(title, tuple(measures))


def load_piece(path: Union[str, Path], title: Optional[str] = None) -> Piece:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        return piece_from_json(json.loads(text))
    return parse_piece(text, title or path.stem)


def piece_from_json(doc: dict) -> Piece:
    """``{"title": ..., "measures": [{"measure": 1, "tones": ["C", "E", "G"]}, ...]}``"""
    lines = [f"{m['measure']}: {' '.join(m['tones'])}" for m in doc["measures"]]
    return parse_piece("\n".join(lines), doc.get("title", "untitled"))


def bwv846() -> Piece:
    text = resources.files("goldenico").joinpath("data/bwv846.txt").read_text(encoding="utf-8")
    return parse_piece(text, "BWV 846")


@dataclass(frozen=True)
class MeasureAnalysis:
    measure: int
    pcs: frozenset[int]
    chosen: GoldenDecomposition
    alternatives: int

    @property
    def shape(self) -> Shape:
        return self.chosen.shape

    def to_json_dict(self) -> dict:
        return {
            "measure": self.measure,
            "pcs": sorted(self.pcs),
            "figures": self.chosen.to_json_dict(),
            "shape": self.shape.label,
            "alternatives": self.alternatives,
        }


@dataclass(frozen=True)
class PieceSummary:
    histogram: dict[str, int]

    @property
    def distinct_shapes(self) -> int:
        return len(self.histogram)


def _relative_key(d: GoldenDecomposition, pcs: frozenset[int]) -> tuple:
    """Content order read relative to the measure, up to whole-tone shifts.

    Shifting a measure by a whole tone leaves this order unchanged, and it
    ignores triangle/gnomon kind, so dual types pick dual decompositions.
    """
    def shifted(t: int) -> tuple:
        return tuple(sorted((p - t) % 12 for p in pcs))

    best = min(shifted(t) for t in range(0, 12, 2))
    return min(
        d.transposed(-t).content_key() for t in range(0, 12, 2) if shifted(t) == best
    )


def _options(piece: Piece, structure: GoldenStructure, prefer_rectangles: bool):
    out = []
    for number, pcs in piece.measures:
        ds = golden_decompositions(structure, pcs)
        if not ds:
            label = structure.type.label if structure.type else "given"
            raise AnalysisError(
                f"measure {number} ({names(sorted(pcs))}) is golden singular on type {label}",
                number,
            )
        ds = sorted(ds, key=lambda d: _relative_key(d, pcs))
        if prefer_rectangles:
            with_rect = [d for d in ds if d.shape.rectangles]
            ds = with_rect or ds
        out.append((number, pcs, ds))
    return out


def analyze_piece(
    piece: Piece,
    structure: Union[GoldenStructure, ExceptionalType, int, str],
    prefer_rectangles: bool = False,
) -> tuple[list[MeasureAnalysis], PieceSummary]:
    """Choose one minimum decomposition per measure with the fewest shapes overall.

    ``prefer_rectangles`` first narrows each measure to decompositions that
    use a golden rectangle whenever one exists.
    """
    if not isinstance(structure, GoldenStructure):
        structure = structure_for(structure)
    options = _options(piece, structure, prefer_rectangles)
    universe = sorted({d.shape for _, _, ds in options for d in ds})
    allowed = None
    for size in range(1, len(universe) + 1):
        for subset in itertools.combinations(universe, size):
            if all(any(d.shape in subset for d in ds) for _, _, ds in options):
                allowed = set(subset)
                break
        if allowed is not None:
            break
    assert allowed is not None  # the full universe is always feasible

    measures = []
    for number, pcs, ds in options:
        chosen = next(d for d in ds if d.shape in allowed)
        full = len(golden_decompositions(structure, pcs))
        measures.append(MeasureAnalysis(number, pcs, chosen, full))
    counts = Counter(m.shape for m in measures)
    histogram = {s.label: counts[s] for s in sorted(counts)}
    return measures, PieceSummary(histogram)


@dataclass(frozen=True)
class DualityRow:
    measure: int
    first: GoldenDecomposition
    second: GoldenDecomposition

    @property
    def consistent(self) -> bool:
        return self.second == self.first.swapped()


def duality_report(
    piece: Piece,
    first: Union[GoldenStructure, ExceptionalType, int] = ExceptionalType.T2,
    second: Union[GoldenStructure, ExceptionalType, int] = ExceptionalType.T3,
) -> list[DualityRow]:
    """Compare the chosen decompositions on two types measure by measure.

    Triangles on one should be gnomons on the other and rectangles stay put.
    """
    a, _ = analyze_piece(piece, first)
    b, _ = analyze_piece(piece, second)
    return [DualityRow(x.measure, x.chosen, y.chosen) for x, y in zip(a, b)]


def analysis_json(piece: Piece, measures: Sequence[MeasureAnalysis], summary: PieceSummary,
                  type_label: str) -> str:
    doc = {
        "title": piece.title,
        "type": type_label,
        "measures": [m.to_json_dict() for m in measures],
        "summary": {"histogram": summary.histogram, "distinct_shapes": summary.distinct_shapes},
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def analysis_text(measures: Sequence[MeasureAnalysis], summary: PieceSummary) -> str:
    lines = [f"{'m.':>4}  {'tones':<18} {'shape':<7} {'alt':>3}  figures"]
    for m in measures:
        lines.append(
            f"{m.measure:>4}  {names(sorted(m.pcs)):<18} {m.shape.label:<7} "
            f"{m.alternatives:>3}  {m.chosen}"
        )
    lines.append("")
    lines.append(f"distinct shapes: {summary.distinct_shapes}")
    for label, n in summary.histogram.items():
        lines.append(f"  {label:<7} {n}")
    return "\n".join(lines) + "\n"


__all__ = [
    "AnalysisError", "DualityRow", "MeasureAnalysis", "Piece", "PieceParseError",
    "PieceSummary", "analysis_json", "analysis_text", "analyze_piece", "bwv846",
    "duality_report", "load_piece", "parse_piece", "piece_from_json",
]
