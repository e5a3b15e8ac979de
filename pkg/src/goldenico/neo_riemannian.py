"""P, R, L and D on major/minor triads, and their golden-neighbourhood realisation.

``D`` maps X major -> (X+5) minor and X minor -> (X+5) major.  This is
*not* the usual quality-preserving dominant relation.
"""
from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .assignment import ExceptionalType, GoldenStructure, structure_for
from .icosahedron import (
    GoldenFigure,
    NeighborhoodMode,
    Topology,
    build_topology,
    golden_neighborhood,
    symmetry_group,
    triple_figure,
)
from .pitch import name, pcset


class Quality(enum.Enum):
    MAJOR = "major"
    MINOR = "minor"


class Transform(enum.Enum):
    P = "P"
    R = "R"
    L = "L"
    D = "D"


class RealizationError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Triad:
    root: int
    quality: Quality

    def __post_init__(self):
        object.__setattr__(self, "root", self.root % 12)

    @property
    def pcs(self) -> frozenset[int]:
        third = 4 if self.quality is Quality.MAJOR else 3
        return pcset((self.root, self.root + third, self.root + 7))

    def __str__(self) -> str:
        return f"{name(self.root)} {self.quality.value}"

    @classmethod
    def from_pcs(cls, pcs: Iterable[int]) -> Optional["Triad"]:
        s = pcset(pcs)
        for root in s:
            for q in Quality:
                if cls(root, q).pcs == s:
                    return cls(root, q)
        return None


ALL_TRIADS = tuple(Triad(r, q) for q in Quality for r in range(12))

# (offset, resulting quality) keyed by (transform, source quality)
_RULES = {
    (Transform.P, Quality.MAJOR): (0, Quality.MINOR),
    (Transform.P, Quality.MINOR): (0, Quality.MAJOR),
    (Transform.R, Quality.MAJOR): (9, Quality.MINOR),
    (Transform.R, Quality.MINOR): (3, Quality.MAJOR),
    (Transform.L, Quality.MAJOR): (4, Quality.MINOR),
    (Transform.L, Quality.MINOR): (8, Quality.MAJOR),
    (Transform.D, Quality.MAJOR): (5, Quality.MINOR),
    (Transform.D, Quality.MINOR): (5, Quality.MAJOR),
}


def apply_transform(triad: Triad, kind: Transform) -> Triad:
    offset, quality = _RULES[kind, triad.quality]
    return Triad(triad.root + offset, quality)


def _structure(type_or_structure) -> GoldenStructure:
    if isinstance(type_or_structure, GoldenStructure):
        if type_or_structure.assignment is None:
            raise ValueError("neighbourhood realisation needs a vertex assignment")
        return type_or_structure
    return structure_for(type_or_structure)


@dataclass(frozen=True)
class Realization:
    type: Optional[ExceptionalType]
    triad: Triad
    transform: Transform
    target: Triad
    figure: GoldenFigure
    mode: NeighborhoodMode
    # every mode's neighbour pair, read back as pitch-class sets
    neighbours: dict

    def to_json_dict(self) -> dict:
        return {
            "type": self.type.label if self.type else None,
            "triad": str(self.triad),
            "transform": self.transform.value,
            "target": str(self.target),
            "figure": self.figure.kind.value,
            "mode": self.mode.value,
        }


def realize_transform(
    type_or_structure: Union[ExceptionalType, int, str, GoldenStructure],
    triad: Triad,
    kind: Transform,
    topo: Optional[Topology] = None,
) -> Realization:
    """Find the neighbourhood mode that carries ``triad`` to its P or R image.

    A mode realises the transform when its neighbour pair contains the
    target and the other neighbour is not a triad of the target's quality,
    so the target is picked out uniquely.  Exactly one mode must do so.
    """
    if kind not in (Transform.P, Transform.R):
        raise ValueError("only P and R are realised through neighbourhoods")
    topo = topo or build_topology()
    st = _structure(type_or_structure)
    assign = st.assignment
    figure = triple_figure(topo, assign.vertices(triad.pcs))
    if figure is None:
        raise RealizationError(f"{triad} is not a golden triangle or gnomon")
    target = apply_transform(triad, kind)
    found = []
    neighbours = {}
    for mode in NeighborhoodMode:
        pair = [assign.pitches(f.vertices) for f in golden_neighborhood(topo, figure, mode)]
        neighbours[mode] = pair
        same_quality = [
            t for t in (Triad.from_pcs(p) for p in pair) if t and t.quality is target.quality
        ]
        if same_quality == [target]:
            found.append(mode)
    if len(found) != 1:
        raise RealizationError(
            f"{kind.value}({triad}) realised by {len(found)} modes on {st.type}: {found}"
        )
    return Realization(st.type, triad, kind, target, figure, found[0], neighbours)


def verify_l_via_rotation(
    type_or_structure: Union[ExceptionalType, int, str, GoldenStructure],
    triad: Triad,
    topo: Optional[Topology] = None,
) -> bool:
    """Is L(triad) a three-fold rotation of P(triad) on the icosahedron?"""
    topo = topo or build_topology()
    assign = _structure(type_or_structure).assignment
    src = assign.vertices(apply_transform(triad, Transform.P).pcs)
    dst = assign.vertices(apply_transform(triad, Transform.L).pcs)
    return any(op.order == 3 and op.apply(src) == dst for op in symmetry_group(topo))


@dataclass
class ReachabilityReport:
    type: Optional[ExceptionalType]
    nodes: int
    edges: list[tuple[Triad, Triad, str]]
    components: int

    @property
    def connected(self) -> bool:
        return self.components == 1


def triad_reachability_graph(
    type_or_structure: Union[ExceptionalType, int, str, GoldenStructure],
) -> ReachabilityReport:
    """Triads linked by realised P/R moves plus whole-tone transposition."""
    st = _structure(type_or_structure)
    edges = []
    for t in ALL_TRIADS:
        for kind in (Transform.P, Transform.R):
            r = realize_transform(st, t, kind)
            edges.append((t, r.target, kind.value))
        # whole-tone transposition is an icosahedral symmetry of every type
        edges.append((t, Triad(t.root + 2, t.quality), "T2"))
    adj: dict[Triad, set[Triad]] = {t: set() for t in ALL_TRIADS}
    for a, b, _ in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[Triad] = set()
    components = 0
    for start in ALL_TRIADS:
        if start in seen:
            continue
        components += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            cur = queue.popleft()
            for nxt in adj[cur] - seen:
                seen.add(nxt)
                queue.append(nxt)
    return ReachabilityReport(st.type, len(ALL_TRIADS), edges, components)


def mode_table(type_or_structure) -> dict[tuple[Quality, int, Transform], NeighborhoodMode]:
    """Realising mode keyed by (quality, root parity, transform).

    Raises if two roots of equal parity disagree.
    """
    st = _structure(type_or_structure)
    table: dict = {}
    for t in ALL_TRIADS:
        for kind in (Transform.P, Transform.R):
            key = (t.quality, t.root % 2, kind)
            mode = realize_transform(st, t, kind).mode
            if table.setdefault(key, mode) is not mode:
                raise RealizationError(f"mode for {key} depends on more than root parity")
    return table


def mode_table_json(types: Iterable[ExceptionalType]) -> str:
    doc = {}
    for t in types:
        rows = []
        for (quality, parity, kind), mode in sorted(
            mode_table(t).items(), key=lambda kv: (kv[0][0].value, kv[0][1], kv[0][2].value)
        ):
            rows.append({
                "quality": quality.value,
                "root": "C" if parity == 0 else "C#",
                "transform": kind.value,
                "mode": mode.value,
            })
        doc[t.label] = rows
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def mode_table_text(types: Iterable[ExceptionalType]) -> str:
    lines = [f"{'type':<5} {'triad':<10} {'P':<8} {'R':<8} {'L by C3':<8}"]
    for t in types:
        st = structure_for(t)
        for root in (0, 1):
            for q in Quality:
                triad = Triad(root, q)
                p = realize_transform(st, triad, Transform.P)
                r = realize_transform(st, triad, Transform.R)
                lines.append(
                    f"{t.label:<5} {str(triad):<10} {p.mode.value:<8} {r.mode.value:<8} "
                    f"{'yes' if verify_l_via_rotation(st, triad) else 'no':<8}"
                )
    return "\n".join(lines) + "\n"
