"""Golden decompositions: minimum covers of a harmony by golden-figure subsets.

A decomposition is a *cover*: parts may share tones, every part is a subset
of the harmony and their union is the whole harmony.  All covers of minimum
size are returned; a harmony with none is golden singular.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .assignment import ArityError, ExceptionalType, GoldenStructure, exceptional_types
from .icosahedron import FigureKind
from .pitch import names, parse_tones, pcset

_KIND_RANK = {FigureKind.TRIANGLE: 0, FigureKind.GNOMON: 1, FigureKind.RECTANGLE: 2}


@dataclass(frozen=True)
class GoldenBaseHarmony:
    kind: FigureKind
    pcs: frozenset[int]

    def sort_key(self) -> tuple:
        return (_KIND_RANK[self.kind], sorted(self.pcs))

    def swapped(self) -> "GoldenBaseHarmony":
        return GoldenBaseHarmony(self.kind.dual, self.pcs)

    def __str__(self) -> str:
        return f"{names(sorted(self.pcs))} ({self.kind.value})"


@dataclass(frozen=True)
class Shape:
    """Multiset of figure kinds, e.g. ``gt2`` or ``gr&gg``."""

    triangles: int = 0
    gnomons: int = 0
    rectangles: int = 0

    @classmethod
    def of(cls, kinds: Iterable[FigureKind]) -> "Shape":
        c = Counter(kinds)
        return cls(c[FigureKind.TRIANGLE], c[FigureKind.GNOMON], c[FigureKind.RECTANGLE])

    @classmethod
    def parse(cls, label: str) -> "Shape":
        counts = Counter()
        for part in label.split("&"):
            kind, n = part[:2], part[2:]
            counts[FigureKind(kind)] += int(n) if n else 1
        return cls(counts[FigureKind.TRIANGLE], counts[FigureKind.GNOMON], counts[FigureKind.RECTANGLE])

    @property
    def size(self) -> int:
        return self.triangles + self.gnomons + self.rectangles

    def sort_key(self) -> tuple:
        # gt < gg < gt2 < gg2 < gt&gg < gr < gr&gt < gr&gg
        mixed = int(self.triangles > 0 and self.gnomons > 0)
        return (self.rectangles, self.size, mixed, self.gnomons)

    def __lt__(self, other: "Shape") -> bool:
        return self.sort_key() < other.sort_key()

    def swapped(self) -> "Shape":
        return Shape(self.gnomons, self.triangles, self.rectangles)

    @property
    def label(self) -> str:
        parts = []
        for kind, n in (("gr", self.rectangles), ("gt", self.triangles), ("gg", self.gnomons)):
            if n:
                parts.append(kind if n == 1 else f"{kind}{n}")
        return "&".join(parts) or "empty"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class GoldenDecomposition:
    parts: tuple[GoldenBaseHarmony, ...]

    @classmethod
    def of(cls, parts: Iterable[GoldenBaseHarmony]) -> "GoldenDecomposition":
        return cls(tuple(sorted(set(parts), key=GoldenBaseHarmony.sort_key)))

    @property
    def shape(self) -> Shape:
        return Shape.of(p.kind for p in self.parts)

    @property
    def pcs(self) -> frozenset[int]:
        return frozenset().union(*(p.pcs for p in self.parts))

    def swapped(self) -> "GoldenDecomposition":
        return GoldenDecomposition.of(p.swapped() for p in self.parts)

    def transposed(self, interval: int) -> "GoldenDecomposition":
        return GoldenDecomposition.of(
            GoldenBaseHarmony(p.kind, frozenset((x + interval) % 12 for x in p.pcs)) for p in self.parts
        )

    def content_key(self) -> tuple:
        """Ordering that ignores triangle/gnomon kind, so dual types sort alike."""
        return (sorted(sorted(p.pcs) for p in self.parts), [_KIND_RANK[p.kind] for p in self.parts])

    def __str__(self) -> str:
        return " + ".join(str(p) for p in self.parts)

    def to_json_dict(self) -> list:
        return [{"kind": p.kind.value, "pcs": sorted(p.pcs)} for p in self.parts]


def _harmony(h: Iterable[int]) -> frozenset[int]:
    s = pcset(h)
    if len(s) < 3:
        raise ArityError(f"a harmony needs at least 3 distinct tones, got {sorted(s)}")
    return s


def figures_within(structure: GoldenStructure, h: Iterable[int]) -> list[GoldenBaseHarmony]:
    s = _harmony(h)
    out = [
        GoldenBaseHarmony(kind, f)
        for kind in FigureKind
        for f in structure.figures(kind)
        if f <= s
    ]
    return sorted(out, key=GoldenBaseHarmony.sort_key)


def _mask(pcs: Iterable[int]) -> int:
    m = 0
    for p in pcs:
        m |= 1 << p
    return m


def _union_mask(masks: Iterable[int]) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def golden_decompositions(structure: GoldenStructure, h: Iterable[int]) -> list[GoldenDecomposition]:
    """All minimum covers of ``h``; empty when ``h`` is golden singular.

    Iterative deepening on cover size.  Each level branches on the lowest
    uncovered tone, so every cover is reached only through figures that
    cover some tone nobody earlier covered; duplicates are removed as sets.
    """
    s = _harmony(h)
    figs = figures_within(structure, s)
    full = _mask(s)
    masks = [_mask(f.pcs) for f in figs]
    if _union_mask(masks) != full:
        return []
    by_tone = {p: [i for i, m in enumerate(masks) if m >> p & 1] for p in s}
    biggest = max(len(f.pcs) for f in figs)

    found: set[frozenset[int]] = set()

    def search(covered: int, chosen: list[int], budget: int) -> None:
        if covered == full:
            found.add(frozenset(chosen))
            return
        missing = bin(full & ~covered).count("1")
        if budget == 0 or missing > budget * biggest:
            return
        tone = (full & ~covered & -(full & ~covered)).bit_length() - 1
        for i in by_tone[tone]:
            chosen.append(i)
            search(covered | masks[i], chosen, budget - 1)
            chosen.pop()

    for k in range(1, len(s) + 1):
        search(0, [], k)
        if found:
            break
    decomps = [GoldenDecomposition.of(figs[i] for i in idx) for idx in found]
    return sorted(decomps, key=GoldenDecomposition.content_key)


def is_golden_singular(structure: GoldenStructure, h: Iterable[int]) -> bool:
    s = _harmony(h)
    return _union_mask(_mask(f.pcs) for f in figures_within(structure, s)) != _mask(s)


SEVENTH_CHORDS: dict[str, tuple[int, ...]] = {
    "maj7": (0, 4, 7, 11),
    "min7": (0, 3, 7, 10),
    "dom7": (0, 4, 7, 10),
    "dim7": (0, 3, 6, 9),
    "halfdim7": (0, 3, 6, 10),
    "minMaj7": (0, 3, 7, 11),
    "augMaj7": (0, 4, 8, 11),
}

MYSTIC_CHORD = parse_tones("C F# Bb E A D".split())


def seventh_chord_table(
    structures: Optional[Mapping[ExceptionalType, GoldenStructure]] = None,
) -> dict[ExceptionalType, dict[str, list[GoldenDecomposition]]]:
    structures = structures or exceptional_types()
    return {
        t: {name: golden_decompositions(st, chord) for name, chord in SEVENTH_CHORDS.items()}
        for t, st in sorted(structures.items(), key=lambda kv: kv[0].value)
    }


def singular_k_subsets(structure: GoldenStructure, k: int) -> list[tuple[int, ...]]:
    """Every k-subset of the twelve tones that is golden singular."""
    if not 3 <= k <= 12:
        raise ArityError(f"k must lie in 3..12, got {k}")
    figs = [
        _mask(f) for kind in FigureKind for f in structure.figures(kind)
    ]
    out = []
    for combo in itertools.combinations(range(12), k):
        m = _mask(combo)
        covered = 0
        for f in figs:
            if f & m == f:
                covered |= f
        if covered != m:
            out.append(combo)
    return out


def mystic_chord_analysis(
    structures: Optional[Mapping[ExceptionalType, GoldenStructure]] = None,
) -> dict[ExceptionalType, list[GoldenDecomposition]]:
    structures = structures or exceptional_types()
    return {
        t: golden_decompositions(st, MYSTIC_CHORD)
        for t, st in sorted(structures.items(), key=lambda kv: kv[0].value)
    }


def one_tone_correspondence(a: Sequence[int], b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """A position map ``i -> j`` with ``a[i] == b[j]`` for all but one ``i``.

    Returns ``None`` when ``a`` is not ``b`` with one tone moved and the
    positions permuted.
    """
    a = [p % 12 for p in a]
    b = [p % 12 for p in b]
    for perm in itertools.permutations(range(len(b))):
        if sum(a[i] != b[perm[i]] for i in range(len(a))) == 1:
            return perm
    return None


def generalized_dual_check(
    a: Sequence[int],
    b: Sequence[int],
    structure_a: GoldenStructure,
    structure_b: GoldenStructure,
) -> bool:
    """Is ordered harmony ``a`` a generalized major-minor dual of ``b``?

    ``a`` must be ``b`` with one tone moved by some semitones and positions
    permuted.  Then every golden triangle (gnomon) of ``a`` on ``structure_a``
    at positions (i, j, k) must meet a golden gnomon (triangle) of ``b`` on
    ``structure_b`` at the same positions (i, j, k) of the written order.
    """
    if len(a) != len(b):
        raise ArityError(f"harmonies differ in size: {len(a)} vs {len(b)}")
    if len(set(p % 12 for p in a)) != len(a) or len(set(p % 12 for p in b)) != len(b):
        raise ArityError("ordered harmonies must not repeat a tone")
    if one_tone_correspondence(a, b) is None:
        return False
    seen_any = False
    for idx in itertools.combinations(range(len(a)), 3):
        ka = structure_a.kind_of(a[i] for i in idx)
        if ka is None:
            continue
        seen_any = True
        if structure_b.kind_of(b[i] for i in idx) is not ka.dual:
            return False
    return seen_any


def decompositions_json(results: Mapping[str, Sequence[GoldenDecomposition]]) -> dict:
    return {
        key: {
            "count": len(ds),
            "singular": not ds,
            "decompositions": [d.to_json_dict() for d in ds],
        }
        for key, ds in results.items()
    }


def seventh_table_json(table) -> str:
    doc = {t.label: decompositions_json(row) for t, row in table.items()}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def seventh_table_text(table) -> str:
    chords = list(SEVENTH_CHORDS)
    lines = ["type  " + "".join(f"{c:>10}" for c in chords)]
    for t, row in table.items():
        cells = [str(len(row[c])) if row[c] else "singular" for c in chords]
        lines.append(f"{t.label:<6}" + "".join(f"{c:>10}" for c in cells))
    return "\n".join(lines) + "\n"
