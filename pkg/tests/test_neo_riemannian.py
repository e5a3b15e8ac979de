import json

import pytest
from hypothesis import given, strategies as st

from goldenico.assignment import ExceptionalType
from goldenico.icosahedron import NeighborhoodMode
from goldenico.neo_riemannian import (
    ALL_TRIADS,
    Quality,
    Transform,
    Triad,
    apply_transform,
    mode_table,
    mode_table_json,
    realize_transform,
    triad_reachability_graph,
    verify_l_via_rotation,
)

MAJ, MIN = Quality.MAJOR, Quality.MINOR
APEX, S_EDGE, L_EDGE = NeighborhoodMode
T1, T2, T3, T4 = ExceptionalType
triads = st.sampled_from(ALL_TRIADS)


def test_triad_basics():
    assert Triad(0, MAJ).pcs == {0, 4, 7}
    assert Triad(21, MIN).pcs == {9, 0, 4}
    assert Triad.from_pcs({9, 0, 4}) == Triad(9, MIN)
    assert Triad.from_pcs({0, 1, 2}) is None
    assert len(set(t.pcs for t in ALL_TRIADS)) == 24


@pytest.mark.parametrize(
    "src, kind, dst",
    [
        (Triad(0, MAJ), Transform.P, Triad(0, MIN)),
        (Triad(0, MAJ), Transform.R, Triad(9, MIN)),
        (Triad(0, MAJ), Transform.L, Triad(4, MIN)),
        (Triad(9, MIN), Transform.R, Triad(0, MAJ)),
        (Triad(4, MIN), Transform.L, Triad(0, MAJ)),
        (Triad(0, MAJ), Transform.D, Triad(5, MIN)),
        (Triad(0, MIN), Transform.D, Triad(5, MAJ)),
    ],
)
def test_transform_table(src, kind, dst):
    assert apply_transform(src, kind) == dst


@given(triads, st.sampled_from([Transform.P, Transform.R, Transform.L]))
def test_plr_are_involutions_sharing_two_tones(t, kind):
    image = apply_transform(t, kind)
    assert apply_transform(image, kind) == t
    assert len(t.pcs & image.pcs) == 2
    assert image.quality is not t.quality


def test_realisation_is_unique_everywhere(types):
    for st_ in types.values():
        for t in ALL_TRIADS:
            for kind in (Transform.P, Transform.R):
                r = realize_transform(st_, t, kind)
                assert r.target == apply_transform(t, kind)
                hits = [m for m, pair in r.neighbours.items() if r.target.pcs in pair]
                assert r.mode in hits


def test_type1_modes():
    table = mode_table(T1)
    assert table[MAJ, 0, Transform.P] is S_EDGE
    assert table[MIN, 0, Transform.P] is S_EDGE
    assert table[MAJ, 1, Transform.P] is L_EDGE
    assert table[MIN, 1, Transform.P] is L_EDGE
    for q in Quality:
        for parity in (0, 1):
            assert table[q, parity, Transform.R] is APEX


def test_modes_for_other_types():
    for t in (T2, T4):
        table = mode_table(t)
        assert table[MAJ, 0, Transform.P] is L_EDGE
        assert table[MAJ, 1, Transform.P] is S_EDGE
    assert mode_table(T3) == mode_table(T1)
    assert mode_table(T4) == mode_table(T2)


def test_l_via_rotation_everywhere(types):
    assert all(verify_l_via_rotation(st_, t) for st_ in types.values() for t in ALL_TRIADS)


def test_reachability_connected():
    for t in ExceptionalType:
        report = triad_reachability_graph(t)
        assert report.connected and report.nodes == 24


def test_only_p_and_r_are_realised():
    with pytest.raises(ValueError):
        realize_transform(T1, Triad(0, MAJ), Transform.L)


def test_structure_without_assignment_is_rejected(types):
    with pytest.raises(ValueError):
        realize_transform(types[T1].swapped(), Triad(0, MAJ), Transform.P)


def test_mode_json_is_sorted():
    doc = json.loads(mode_table_json([T1]))
    assert list(doc) == ["1*"] and len(doc["1*"]) == 8
