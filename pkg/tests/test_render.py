import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from goldenico.analysis import golden_decompositions
from goldenico.assignment import ExceptionalType
from goldenico.icosahedron import build_topology
from goldenico.pitch import parse_tones
from goldenico.render import VERTEX_POSITIONS, render_svg

DATA = Path(__file__).parent / "data"
SVG = "{http://www.w3.org/2000/svg}"


def draw(types, t, tones, index=0):
    st_ = types[ExceptionalType(t)]
    pcs = parse_tones(tones.split())
    d = golden_decompositions(st_, pcs)[index]
    return render_svg(st_, d, f"{','.join(tones.split())} on type {t}*")


def _segments_cross(p1, p2, p3, p4):
    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 1e-9) - (v < -1e-9)

    if {p1, p2} & {p3, p4}:
        return False
    return orient(p1, p2, p3) * orient(p1, p2, p4) < 0 and orient(p3, p4, p1) * orient(p3, p4, p2) < 0


def test_layout_is_a_planar_drawing():
    topo = build_topology()
    edges = [(VERTEX_POSITIONS[a], VERTEX_POSITIONS[b]) for a, b in topo.edges()]
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            assert not _segments_cross(*e, *f)


@pytest.mark.parametrize(
    "t, tones, index, golden",
    [(2, "C# E G Bb", 0, "rectangle_t2.svg"), (2, "C F# Bb E A D", 2, "mystic_t2_2.svg")],
)
def test_matches_golden_file(types, t, tones, index, golden):
    assert draw(types, t, tones, index) == (DATA / golden).read_text()


def test_byte_identical_reruns(types):
    assert draw(types, 3, "C E G Bb") == draw(types, 3, "C E G Bb")


def test_overlays(types):
    root = ET.fromstring(draw(types, 2, "C E G").encode())
    polys = root.findall(f".//{SVG}polygon")
    assert [p.get("class") for p in polys] == ["gt"]
    assert len(polys[0].get("points").split()) == 3
    labels = [t.text for t in root.iter(f"{SVG}text")]
    assert sorted(labels[1:]) == sorted("C C# D Eb E F F# G Ab A Bb B".split())
    rect = ET.fromstring(draw(types, 2, "C# E G Bb").encode()).findall(f".//{SVG}polygon")
    assert [p.get("class") for p in rect] == ["gr"]


def test_rectangle_outline_is_simple(types):
    svg = draw(types, 2, "C# E G Bb")
    pts = re.search(r'points="([^"]+)"', svg).group(1).split()
    xy = [tuple(map(float, p.split(","))) for p in pts]
    sides = [(xy[i], xy[(i + 1) % 4]) for i in range(4)]
    assert not _segments_cross(*sides[0], *sides[2])
    assert not _segments_cross(*sides[1], *sides[3])


def test_needs_assignment(types):
    with pytest.raises(ValueError):
        render_svg(types[ExceptionalType.T1].swapped())
