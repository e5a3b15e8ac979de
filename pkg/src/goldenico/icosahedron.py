"""Combinatorics of the regular icosahedron.

Everything here is expressed through the vertex graph: no coordinates are
used.  A pair of distinct vertices is either an edge (``SHORT``), a pentagon
diagonal (``LONG``, golden ratio times an edge) or a diameter.

Canonical vertex numbering::

    0            top vertex
    1 .. 5       upper ring, cyclically adjacent
    6 .. 10      lower ring, cyclically adjacent
    11           bottom vertex

Upper vertex ``i`` touches lower vertices ``5 + i`` and ``5 + i % 5 + 1``.
"""
from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

N_VERTICES = 12


class DegenerateInputError(ValueError):
    """Repeated vertices where distinct ones are required."""


class UnsupportedFigureError(ValueError):
    pass


class DistanceClass(enum.Enum):
    SHORT = "S"
    LONG = "L"
    DIAMETER = "D"


class TripleShape(enum.Enum):
    FACE = "face"
    GOLDEN_TRIANGLE = "golden triangle"
    GOLDEN_GNOMON = "golden gnomon"
    GREAT_TRIANGLE = "great triangle"
    DIAMETER_TRIPLE = "diameter triple"


class FigureKind(enum.Enum):
    TRIANGLE = "gt"
    GNOMON = "gg"
    RECTANGLE = "gr"

    @property
    def dual(self) -> "FigureKind":
        return _DUAL_KIND[self]


_DUAL_KIND = {
    FigureKind.TRIANGLE: FigureKind.GNOMON,
    FigureKind.GNOMON: FigureKind.TRIANGLE,
    FigureKind.RECTANGLE: FigureKind.RECTANGLE,
}


class NeighborhoodMode(enum.Enum):
    APEX_SHARED = "apex"
    S_EDGE_PENTAGON = "s-edge"
    L_EDGE_PENTAGON = "l-edge"


@dataclass(frozen=True)
class Topology:
    neighbors: tuple[frozenset[int], ...]
    antipode: tuple[int, ...]

    @property
    def vertices(self) -> range:
        return range(len(self.neighbors))

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in sorted(self.neighbors[u]) if u < v]

    def faces(self) -> list[tuple[int, int, int]]:
        return [
            (u, v, w)
            for u, v in self.edges()
            for w in sorted(self.neighbors[u] & self.neighbors[v])
            if w > v
        ]


@lru_cache(maxsize=None)
def build_topology() -> Topology:
    nbrs: list[set[int]] = [set() for _ in range(N_VERTICES)]

    def join(a: int, b: int) -> None:
        nbrs[a].add(b)
        nbrs[b].add(a)

    for i in range(1, 6):
        nxt = i % 5 + 1
        join(0, i)
        join(i, nxt)
        join(i, 5 + i)
        join(i, 5 + nxt)
        join(11, 5 + i)
        join(5 + i, 5 + nxt)

    # the antipode is the only vertex at graph distance 3
    antipode = []
    for v in range(N_VERTICES):
        near = {v} | nbrs[v]
        near |= set().union(*(nbrs[u] for u in nbrs[v]))
        (far,) = set(range(N_VERTICES)) - near
        antipode.append(far)
    return Topology(tuple(frozenset(s) for s in nbrs), tuple(antipode))


def distance_class(topo: Topology, u: int, v: int) -> DistanceClass:
    if u == v:
        raise DegenerateInputError(f"distance of vertex {u} to itself is undefined")
    if topo.adjacent(u, v):
        return DistanceClass.SHORT
    if topo.antipode[u] == v:
        return DistanceClass.DIAMETER
    return DistanceClass.LONG


# (number of long sides, number of short sides) -> shape
_SHAPE_BY_CLASSES = {
    (0, 3): TripleShape.FACE,
    (2, 1): TripleShape.GOLDEN_TRIANGLE,
    (1, 2): TripleShape.GOLDEN_GNOMON,
    (3, 0): TripleShape.GREAT_TRIANGLE,
}


def _distinct(vertices: Iterable[int], n: int) -> tuple[int, ...]:
    vs = tuple(vertices)
    if len(vs) != n or len(set(vs)) != n:
        raise DegenerateInputError(f"expected {n} distinct vertices, got {vs}")
    return vs


def classify_triple(topo: Topology, triple: Iterable[int]) -> TripleShape:
    a, b, c = _distinct(triple, 3)
    count = Counter(distance_class(topo, x, y) for x, y in ((a, b), (a, c), (b, c)))
    if count[DistanceClass.DIAMETER]:
        return TripleShape.DIAMETER_TRIPLE
    return _SHAPE_BY_CLASSES[count[DistanceClass.LONG], count[DistanceClass.SHORT]]


@dataclass(frozen=True)
class GoldenFigure:
    """A golden triangle, gnomon or rectangle given by its vertex set.

    Triangles and gnomons carry their apex (the vertex joined to the other
    two by equal sides).  Rectangles have no apex.
    """

    kind: FigureKind
    vertices: frozenset[int]
    apex: Optional[int] = None

    @property
    def base(self) -> frozenset[int]:
        return self.vertices - {self.apex}

    def edges(self) -> list[frozenset[int]]:
        return [frozenset(p) for p in itertools.combinations(sorted(self.vertices), 2)]

    def sort_key(self) -> tuple:
        return (list(FigureKind).index(self.kind), tuple(sorted(self.vertices)))


def triple_figure(topo: Topology, triple: Iterable[int]) -> Optional[GoldenFigure]:
    """Return the golden triangle/gnomon spanned by ``triple``, if any."""
    vs = _distinct(triple, 3)
    shape = classify_triple(topo, vs)
    if shape is TripleShape.GOLDEN_TRIANGLE:
        kind, odd = FigureKind.TRIANGLE, DistanceClass.SHORT
    elif shape is TripleShape.GOLDEN_GNOMON:
        kind, odd = FigureKind.GNOMON, DistanceClass.LONG
    else:
        return None
    # the apex is opposite the odd side
    for apex in vs:
        b, c = (x for x in vs if x != apex)
        if distance_class(topo, b, c) is odd:
            return GoldenFigure(kind, frozenset(vs), apex)
    raise AssertionError("isosceles triple without apex")


def quad_is_rectangle(topo: Topology, quad: Iterable[int]) -> bool:
    a, b, c, d = _distinct(quad, 4)
    vs = {a, b, c, d}
    if topo.antipode[a] not in vs:
        return False
    rest = vs - {a, topo.antipode[a]}
    x, y = sorted(rest)
    return topo.antipode[x] == y and (topo.adjacent(a, x) or topo.adjacent(a, y))


@lru_cache(maxsize=None)
def enumerate_golden_figures(topo: Topology) -> tuple[GoldenFigure, ...]:
    figures = []
    for triple in itertools.combinations(topo.vertices, 3):
        fig = triple_figure(topo, triple)
        if fig is not None:
            figures.append(fig)
    rects = {
        frozenset((u, v, topo.antipode[u], topo.antipode[v])) for u, v in topo.edges()
    }
    figures.extend(GoldenFigure(FigureKind.RECTANGLE, r) for r in rects)
    return tuple(sorted(figures, key=GoldenFigure.sort_key))


def link_pentagon(topo: Topology, v: int) -> tuple[int, ...]:
    """Neighbours of ``v`` in cyclic order, starting from the smallest."""
    ring = topo.neighbors[v]
    start = min(ring)
    order = [start]
    prev = None
    while len(order) < len(ring):
        cur = order[-1]
        nxt = sorted(w for w in ring & topo.neighbors[cur] if w != prev and w not in order)
        prev = cur
        order.append(nxt[0])
    # orient so that the second entry is the smaller of the two neighbours
    if order[-1] < order[1]:
        order = [order[0]] + order[:0:-1]
    return tuple(order)


def figure_pentagon(topo: Topology, figure: GoldenFigure) -> int:
    """Centre of the unique link pentagon containing a triangle or gnomon."""
    centres = [w for w in topo.vertices if figure.vertices <= topo.neighbors[w]]
    if len(centres) != 1:
        raise AssertionError(f"{figure} lies on {len(centres)} pentagons")
    return centres[0]


def _shares_edge(fig: GoldenFigure, other: GoldenFigure, topo: Topology, cls: DistanceClass) -> bool:
    common = sorted(fig.vertices & other.vertices)
    return any(
        distance_class(topo, a, b) is cls for a, b in itertools.combinations(common, 2)
    )


def golden_neighborhood(
    topo: Topology, figure: GoldenFigure, mode: NeighborhoodMode
) -> tuple[GoldenFigure, GoldenFigure]:
    """The two figures golden-neighbouring ``figure`` in the given mode.

    ``APEX_SHARED`` keeps the kind: same apex plus one shared leg.  The
    pentagon modes switch kind and require a shared short (``S_EDGE``) or
    long (``L_EDGE``) edge, with both figures on the same link pentagon.
    """
    if figure.kind is FigureKind.RECTANGLE:
        raise UnsupportedFigureError("golden neighbourhoods are defined for triangles and gnomons")
    catalog = enumerate_golden_figures(topo)
    if mode is NeighborhoodMode.APEX_SHARED:
        leg = DistanceClass.LONG if figure.kind is FigureKind.TRIANGLE else DistanceClass.SHORT
        found = [
            f
            for f in catalog
            if f.kind is figure.kind
            and f != figure
            and f.apex == figure.apex
            and any(distance_class(topo, f.apex, x) is leg for x in f.base & figure.base)
        ]
    else:
        edge = DistanceClass.SHORT if mode is NeighborhoodMode.S_EDGE_PENTAGON else DistanceClass.LONG
        ring = topo.neighbors[figure_pentagon(topo, figure)]
        found = [
            f
            for f in catalog
            if f.kind is figure.kind.dual
            and f.vertices <= ring
            and _shares_edge(figure, f, topo, edge)
        ]
    if len(found) != 2:
        raise AssertionError(f"{mode} neighbourhood of {figure} has {len(found)} members")
    return found[0], found[1]


@dataclass(frozen=True)
class SymmetryOperation:
    permutation: tuple[int, ...]
    proper: bool

    def __call__(self, v: int) -> int:
        return self.permutation[v]

    def apply(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.permutation[v] for v in vertices)

    def apply_figure(self, fig: GoldenFigure) -> GoldenFigure:
        apex = None if fig.apex is None else self.permutation[fig.apex]
        return GoldenFigure(fig.kind, self.apply(fig.vertices), apex)

    def compose(self, other: "SymmetryOperation") -> "SymmetryOperation":
        """``self`` after ``other``."""
        perm = tuple(self.permutation[other.permutation[v]] for v in range(len(self.permutation)))
        return SymmetryOperation(perm, self.proper == other.proper)

    def inverse(self) -> "SymmetryOperation":
        inv = [0] * len(self.permutation)
        for v, w in enumerate(self.permutation):
            inv[w] = v
        return SymmetryOperation(tuple(inv), self.proper)

    @property
    def order(self) -> int:
        k, cur = 1, self.permutation
        ident = tuple(range(len(cur)))
        while cur != ident:
            cur = tuple(self.permutation[v] for v in cur)
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for v in range(len(self.permutation)):
            if v in seen:
                continue
            cyc = [v]
            seen.add(v)
            w = self.permutation[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self.permutation[w]
            out.append(tuple(cyc))
        return out


def _oriented_faces(topo: Topology) -> set[tuple[int, int, int]]:
    """All cyclic rotations of a coherent orientation of the 20 faces."""
    faces = topo.faces()
    a, b, c = faces[0]
    oriented = {(a, b, c)}
    queue = [(a, b, c)]
    while queue:
        x, y, z = queue.pop()
        # across each directed edge (p, q) the neighbour traverses (q, p)
        for p, q in ((x, y), (y, z), (z, x)):
            (r,) = (topo.neighbors[p] & topo.neighbors[q]) - {x, y, z}
            face = (q, p, r)
            key = min((face, face[1:] + face[:1], face[2:] + face[:2]))
            if key not in oriented:
                oriented.add(key)
                queue.append(key)
    return {rot for f in oriented for rot in (f, f[1:] + f[:1], f[2:] + f[:2])}


@lru_cache(maxsize=None)
def symmetry_group(topo: Topology) -> tuple[SymmetryOperation, ...]:
    """All 120 adjacency-preserving permutations, sorted by permutation."""
    oriented = _oriented_faces(topo)
    x, y, z = topo.faces()[0]
    ops = []
    for face in topo.faces():
        for a, b, c in itertools.permutations(face):
            perm = _extend(topo, {x: a, y: b, z: c})
            if perm is None:
                continue
            # (x, y, z) seeds the orientation, so it is positively oriented
            ops.append(SymmetryOperation(perm, (a, b, c) in oriented))
    ops.sort(key=lambda op: op.permutation)
    return tuple(ops)


def _extend(topo: Topology, partial: dict[int, int]) -> Optional[tuple[int, ...]]:
    # a vertex adjacent to two mapped, adjacent vertices is one of only two
    # common neighbours; the one not yet used is forced
    m = dict(partial)
    progress = True
    while progress and len(m) < N_VERTICES:
        progress = False
        for v in topo.vertices:
            if v in m:
                continue
            mapped = [u for u in topo.neighbors[v] if u in m]
            if len(mapped) < 2:
                continue
            cand = set(topo.vertices) - set(m.values())
            for u in mapped:
                cand &= topo.neighbors[m[u]]
            if len(cand) == 1:
                m[v] = cand.pop()
                progress = True
    if len(m) < N_VERTICES:
        return None
    perm = tuple(m[v] for v in topo.vertices)
    if all(topo.adjacent(perm[u], perm[v]) for u, v in topo.edges()):
        return perm
    return None


def is_symmetry(topo: Topology, perm: Sequence[int]) -> bool:
    return tuple(perm) in {op.permutation for op in symmetry_group(topo)}
