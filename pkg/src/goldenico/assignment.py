"""Musical icosahedra: bijections of the twelve pitch classes onto vertices.

The four exceptional musical icosahedra are not hard-coded.  They are
recovered by exhaustive search over assignments in which transposition by a
whole tone is an icosahedral symmetry, keeping those on which every major and
minor triad lands on a golden triangle or gnomon.
"""
from __future__ import annotations

import enum
import itertools
import json
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

from .icosahedron import (
    FigureKind,
    SymmetryOperation,
    Topology,
    build_topology,
    quad_is_rectangle,
    symmetry_group,
    triple_figure,
)
from .pitch import names, pcset, transpose

PitchSet = frozenset[int]


class LabelingError(RuntimeError):
    pass


class ArityError(ValueError):
    pass


class SurplusClassesWarning(UserWarning):
    pass


class ExceptionalType(enum.Enum):
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4

    @property
    def label(self) -> str:
        return f"{self.value}*"

    @classmethod
    def coerce(cls, value: Union["ExceptionalType", int, str]) -> "ExceptionalType":
        if isinstance(value, cls):
            return value
        text = str(value).strip().upper().rstrip("*").lstrip("T")
        try:
            return cls(int(text))
        except ValueError:
            raise ValueError(f"no exceptional type {value!r}; use 1, 2, 3 or 4") from None


@dataclass(frozen=True)
class MusicalIcosahedron:
    """``to_vertex[pc]`` is the vertex carrying pitch class ``pc``."""

    to_vertex: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.to_vertex) != list(range(12)):
            raise ValueError(f"not a bijection onto 12 vertices: {self.to_vertex}")

    @property
    def from_vertex(self) -> tuple[int, ...]:
        inv = [0] * 12
        for pc, v in enumerate(self.to_vertex):
            inv[v] = pc
        return tuple(inv)

    def vertices(self, pcs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.to_vertex[p % 12] for p in pcs)

    def pitches(self, vertices: Iterable[int]) -> frozenset[int]:
        inv = self.from_vertex
        return frozenset(inv[v] for v in vertices)

    def moved(self, op: SymmetryOperation) -> "MusicalIcosahedron":
        """The same labelling carried along by an icosahedral symmetry."""
        return MusicalIcosahedron(tuple(op(v) for v in self.to_vertex))


def induced_permutation(assignment: MusicalIcosahedron, interval: int) -> tuple[int, ...]:
    """Vertex permutation ``v -> to_vertex(from_vertex(v) + interval)``."""
    inv = assignment.from_vertex
    return tuple(assignment.to_vertex[(inv[v] + interval) % 12] for v in range(12))


def has_hexagon_symmetry(assignment: MusicalIcosahedron, topo: Optional[Topology] = None) -> bool:
    topo = topo or build_topology()
    perm = induced_permutation(assignment, 2)
    return perm in _group_perms(topo)


@lru_cache(maxsize=None)
def _group_perms(topo: Topology) -> frozenset[tuple[int, ...]]:
    return frozenset(op.permutation for op in symmetry_group(topo))


def major_triad(root: int) -> PitchSet:
    return pcset((root, root + 4, root + 7))


def minor_triad(root: int) -> PitchSet:
    return pcset((root, root + 3, root + 7))


def is_golden_self_dual(assignment: MusicalIcosahedron, topo: Optional[Topology] = None) -> bool:
    topo = topo or build_topology()
    for root in range(12):
        for triad in (major_triad(root), minor_triad(root)):
            if triple_figure(topo, assignment.vertices(triad)) is None:
                return False
    return True


@dataclass(frozen=True)
class GoldenStructure:
    """Which pitch-class triples and quadruples are golden figures on one icosahedron.

    Equality only looks at the three figure sets, so any two
    symmetry-equivalent assignments give equal structures.
    """

    triangles: frozenset[PitchSet]
    gnomons: frozenset[PitchSet]
    rectangles: frozenset[PitchSet]
    type: Optional[ExceptionalType] = field(default=None, compare=False)
    assignment: Optional[MusicalIcosahedron] = field(default=None, compare=False, repr=False)

    @classmethod
    def from_assignment(
        cls, assignment: MusicalIcosahedron, type: Optional[ExceptionalType] = None,
        topo: Optional[Topology] = None,
    ) -> "GoldenStructure":
        topo = topo or build_topology()
        tri, gno = set(), set()
        for triple in itertools.combinations(range(12), 3):
            fig = triple_figure(topo, assignment.vertices(triple))
            if fig is None:
                continue
            (tri if fig.kind is FigureKind.TRIANGLE else gno).add(frozenset(triple))
        rect = {
            frozenset(q)
            for q in itertools.combinations(range(12), 4)
            if quad_is_rectangle(topo, assignment.vertices(q))
        }
        return cls(frozenset(tri), frozenset(gno), frozenset(rect), type, assignment)

    def figures(self, kind: FigureKind) -> frozenset[PitchSet]:
        return {
            FigureKind.TRIANGLE: self.triangles,
            FigureKind.GNOMON: self.gnomons,
            FigureKind.RECTANGLE: self.rectangles,
        }[kind]

    def kind_of(self, pcs: Iterable[int]) -> Optional[FigureKind]:
        return chord_figure_kind(self, pcs)

    def swapped(self) -> "GoldenStructure":
        return GoldenStructure(self.gnomons, self.triangles, self.rectangles)

    def relabeled(self, mapping: Mapping[int, int]) -> "GoldenStructure":
        def move(sets):
            return frozenset(frozenset(mapping[p] for p in s) for s in sets)

        return GoldenStructure(move(self.triangles), move(self.gnomons), move(self.rectangles))

    def transposed(self, interval: int) -> "GoldenStructure":
        return self.relabeled({p: (p + interval) % 12 for p in range(12)})

    def to_json_dict(self) -> dict:
        def rows(sets):
            return sorted(sorted(s) for s in sets)

        out = {
            "type": self.type.label if self.type else None,
            "triangles": rows(self.triangles),
            "gnomons": rows(self.gnomons),
            "rectangles": rows(self.rectangles),
        }
        if self.assignment is not None:
            out["to_vertex"] = list(self.assignment.to_vertex)
        return out

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "GoldenStructure":
        def sets(key):
            return frozenset(frozenset(r) for r in doc[key])

        t = ExceptionalType.coerce(doc["type"]) if doc.get("type") else None
        a = MusicalIcosahedron(tuple(doc["to_vertex"])) if doc.get("to_vertex") else None
        return cls(sets("triangles"), sets("gnomons"), sets("rectangles"), t, a)


def chord_figure_kind(structure: GoldenStructure, pcs: Iterable[int]) -> Optional[FigureKind]:
    s = pcset(pcs)
    if len(s) == 3:
        if s in structure.triangles:
            return FigureKind.TRIANGLE
        if s in structure.gnomons:
            return FigureKind.GNOMON
        return None
    if len(s) == 4:
        return FigureKind.RECTANGLE if s in structure.rectangles else None
    raise ArityError(f"figure lookup needs 3 or 4 distinct tones, got {sorted(s)}")


def transpose_harmony(pcs: Iterable[int], interval: int) -> PitchSet:
    return transpose(pcs, interval)


@dataclass(frozen=True)
class ExceptionalClass:
    representative: MusicalIcosahedron
    members: tuple[MusicalIcosahedron, ...]
    structure: GoldenStructure
    rotation_classes: int


def hexagon_candidates(topo: Optional[Topology] = None) -> list[MusicalIcosahedron]:
    """Every assignment whose whole-tone transposition is a symmetry.

    Such a symmetry has two 6-cycles; even pitch classes run along one and
    odd along the other.  Order: group order, then cycle choice, then offsets.
    """
    topo = topo or build_topology()
    out = []
    for op in symmetry_group(topo):
        cycles = op.cycles()
        if sorted(map(len, cycles)) != [6, 6]:
            continue
        for even, odd in (cycles, cycles[::-1]):
            for se, so in itertools.product(range(6), repeat=2):
                to_vertex = [0] * 12
                for k in range(6):
                    to_vertex[2 * k] = even[(se + k) % 6]
                    to_vertex[2 * k + 1] = odd[(so + k) % 6]
                out.append(MusicalIcosahedron(tuple(to_vertex)))
    return out


def _canonical(assignment: MusicalIcosahedron, ops: Sequence[SymmetryOperation]) -> tuple[int, ...]:
    return min(tuple(op(v) for v in assignment.to_vertex) for op in ops)


def search_exceptional(topo: Optional[Topology] = None) -> list[ExceptionalClass]:
    topo = topo or build_topology()
    group = symmetry_group(topo)
    rotations = [op for op in group if op.proper]
    survivors = [
        a for a in hexagon_candidates(topo)
        if has_hexagon_symmetry(a, topo) and is_golden_self_dual(a, topo)
    ]
    buckets: dict[tuple[int, ...], list[MusicalIcosahedron]] = {}
    for a in survivors:
        buckets.setdefault(_canonical(a, group), []).append(a)
    classes = []
    for key in sorted(buckets):
        members = tuple(buckets[key])
        rep = MusicalIcosahedron(key)
        n_rot = len({_canonical(a, rotations) for a in members})
        classes.append(
            ExceptionalClass(rep, members, GoldenStructure.from_assignment(rep, topo=topo), n_rot)
        )
    return classes


# Swaps tritone partners inside the even whole-tone scale only.  Swapping
# every tritone pair would be transposition by 6, a symmetry of each type.
TRITONE_SWAP = {p: (p + 6) % 12 if p % 2 == 0 else p for p in range(12)}

DOMINANT_SEVENTH = pcset((0, 4, 7, 10))
HALF_DIMINISHED_SEVENTH = pcset((0, 3, 6, 10))


def _has_uncovered_tone(structure: GoldenStructure, harmony: PitchSet) -> bool:
    inside = [
        s for kind in FigureKind for s in structure.figures(kind) if s <= harmony
    ]
    covered = frozenset().union(*inside) if inside else frozenset()
    return covered != harmony


def _anchored(structure: GoldenStructure) -> bool:
    return (
        structure.kind_of((0, 4, 7)) is FigureKind.TRIANGLE
        and structure.kind_of((0, 3, 7)) is FigureKind.GNOMON
        and structure.kind_of((1, 5, 8)) is FigureKind.GNOMON
        and structure.kind_of((1, 4, 8)) is FigureKind.TRIANGLE
    )


def label_types(classes: Sequence[ExceptionalClass]) -> dict[ExceptionalType, GoldenStructure]:
    """Attach the 1*..4* names to the classes found by the search.

    1* and 2* both put C major on a triangle and C minor on a gnomon; 1* is
    the one on which the dominant seventh is golden singular, 2* the one on
    which the half-diminished seventh is.  4* and 3* are 1* and 2* with
    triangles and gnomons exchanged.
    """
    pool = [c.structure for c in classes]
    anchored = [s for s in pool if _anchored(s)]

    def pick(cands, what):
        if len(cands) != 1:
            found = "; ".join(
                f"C maj={s.kind_of((0, 4, 7))}, C min={s.kind_of((0, 3, 7))}" for s in cands
            )
            raise LabelingError(
                f"expected exactly one class for {what}, found {len(cands)} "
                f"among {len(pool)} classes [{found}]"
            )
        return cands[0]

    t1 = pick([s for s in anchored if _has_uncovered_tone(s, DOMINANT_SEVENTH)], "type 1*")
    t2 = pick([s for s in anchored if _has_uncovered_tone(s, HALF_DIMINISHED_SEVENTH)], "type 2*")
    if t1 == t2:
        raise LabelingError("types 1* and 2* resolve to the same class")
    if t1.relabeled(TRITONE_SWAP) != t2:
        raise LabelingError("type 2* is not type 1* with half-scale tritone swap")
    t4 = pick([s for s in pool if s == t1.swapped()], "type 4*")
    t3 = pick([s for s in pool if s == t2.swapped()], "type 3*")

    labeled = {
        ExceptionalType.T1: t1, ExceptionalType.T2: t2,
        ExceptionalType.T3: t3, ExceptionalType.T4: t4,
    }
    used = list(labeled.values())
    surplus = [s for s in pool if not any(s == u for u in used)]
    if surplus:
        warnings.warn(
            f"{len(surplus)} exceptional class(es) beyond the four labeled types",
            SurplusClassesWarning,
        )
    return {
        t: GoldenStructure(s.triangles, s.gnomons, s.rectangles, t, s.assignment)
        for t, s in labeled.items()
    }


@lru_cache(maxsize=1)
def exceptional_types() -> dict[ExceptionalType, GoldenStructure]:
    return label_types(search_exceptional())


def structure_for(type: Union[ExceptionalType, int, str]) -> GoldenStructure:
    return exceptional_types()[ExceptionalType.coerce(type)]


def structures_json(structures: Mapping[ExceptionalType, GoldenStructure]) -> str:
    doc = {t.label: structures[t].to_json_dict() for t in sorted(structures, key=lambda t: t.value)}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def describe(structure: GoldenStructure) -> str:
    lines = [f"type {structure.type.label if structure.type else '?'}"]
    for kind in FigureKind:
        sets = sorted(sorted(s) for s in structure.figures(kind))
        lines.append(f"  {kind.value} ({len(sets)}): " + " ".join(f"[{names(s)}]" for s in sets))
    return "\n".join(lines)
