import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from goldenico.analysis import (
    MYSTIC_CHORD,
    SEVENTH_CHORDS,
    GoldenDecomposition,
    Shape,
    generalized_dual_check,
    golden_decompositions,
    is_golden_singular,
    mystic_chord_analysis,
    one_tone_correspondence,
    seventh_chord_table,
    singular_k_subsets,
)
from goldenico.assignment import ArityError, ExceptionalType
from goldenico.pitch import parse_tones

T1, T2, T3, T4 = ExceptionalType
harmonies = st.sets(st.integers(0, 11), min_size=3, max_size=8)


def as_sets(ds):
    return {frozenset((p.kind.value, p.pcs) for p in d.parts) for d in ds}


@pytest.mark.parametrize("size", [3, 4])
def test_engine_matches_naive_covers(each_type, size):
    _, st_ = each_type
    for h in itertools.combinations(range(12), size):
        assert as_sets(golden_decompositions(st_, h)) == set(oracles.naive_covers(st_, h))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(list(ExceptionalType)), st.sets(st.integers(0, 11), min_size=5, max_size=7))
def test_engine_matches_naive_covers_larger(types, t, h):
    st_ = types[t]
    assert as_sets(golden_decompositions(st_, h)) == set(oracles.naive_covers(st_, h))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(ExceptionalType)), harmonies, st.integers(0, 11))
def test_transposition_moves_decompositions(types, t, h, k):
    st_ = types[t]
    ds = golden_decompositions(st_, h)
    moved = golden_decompositions(st_, {(p + k) % 12 for p in h})
    shifted = {
        frozenset((p.kind.value if k % 2 == 0 else p.kind.dual.value,
                   frozenset((x + k) % 12 for x in p.pcs)) for p in d.parts)
        for d in ds
    }
    assert as_sets(moved) == shifted


@settings(max_examples=60, deadline=None)
@given(harmonies)
def test_dual_types_swap_kinds(types, h):
    for a, b in ((T1, T4), (T2, T3)):
        assert golden_decompositions(types[b], h) == [
            d.swapped() for d in golden_decompositions(types[a], h)
        ]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(ExceptionalType)), harmonies)
def test_singular_iff_no_decomposition(types, t, h):
    st_ = types[t]
    ds = golden_decompositions(st_, h)
    assert is_golden_singular(st_, h) == (not ds)
    for d in ds:
        assert d.pcs == frozenset(h)
        assert all(p.pcs <= frozenset(h) for p in d.parts)


def test_arity_errors(types):
    with pytest.raises(ArityError):
        golden_decompositions(types[T1], (0, 4))
    with pytest.raises(ArityError):
        singular_k_subsets(types[T1], 2)


def test_k_subset_scan_counts(each_type):
    _, st_ = each_type
    assert len(singular_k_subsets(st_, 3)) == 220 - 120
    assert len(singular_k_subsets(st_, 4)) == 120
    assert singular_k_subsets(st_, 5) == []
    assert singular_k_subsets(st_, 6) == []


def test_k_subset_scan_agrees_with_engine(types):
    st_ = types[T2]
    slow = [h for h in itertools.combinations(range(12), 4) if not golden_decompositions(st_, h)]
    assert singular_k_subsets(st_, 4) == slow


# counts found by exhaustive computation
COMPUTED_SEVENTHS = {
    T1: {"maj7": 3, "min7": 3, "dom7": 0, "dim7": 1, "halfdim7": 1, "minMaj7": 1, "augMaj7": 3},
    T2: {"maj7": 3, "min7": 3, "dom7": 1, "dim7": 1, "halfdim7": 0, "minMaj7": 3, "augMaj7": 1},
}
COMPUTED_SEVENTHS[T4] = COMPUTED_SEVENTHS[T1]
COMPUTED_SEVENTHS[T3] = COMPUTED_SEVENTHS[T2]


def test_seventh_table_regression():
    table = seventh_chord_table()
    assert {t: {c: len(ds) for c, ds in row.items()} for t, row in table.items()} == COMPUTED_SEVENTHS
    # the diminished seventh is a golden rectangle on every type
    for row in table.values():
        assert [d.shape.label for d in row["dim7"]] == ["gr"]


def test_major_seventh_covers_on_type1(types):
    covers = {str(d) for d in golden_decompositions(types[T1], parse_tones("C E G B".split()))}
    assert covers == {
        "C,E,G (gt) + C,E,B (gg)",
        "C,E,G (gt) + E,G,B (gg)",
        "C,E,B (gg) + E,G,B (gg)",
    }


def test_mystic_chord_regression(each_type):
    _, st_ = each_type
    ds = golden_decompositions(st_, MYSTIC_CHORD)
    assert len(ds) == 5
    assert sum(d.shape.rectangles == 1 for d in ds) == 3
    assert all(d.shape.size == 2 for d in ds)


def test_mystic_analysis_covers_all_types():
    assert {t: len(ds) for t, ds in mystic_chord_analysis().items()} == {t: 5 for t in ExceptionalType}


def test_shape_order_and_labels():
    order = ["gt", "gg", "gt2", "gg2", "gt&gg", "gr", "gr&gt", "gr&gg"]
    shapes = [Shape.parse(s) for s in order]
    assert sorted(reversed(shapes)) == shapes
    assert [s.label for s in shapes] == order
    assert Shape.parse("gt2").swapped() == Shape.parse("gg2")


def test_decomposition_ordering_is_kind_blind(types):
    h = parse_tones("C D E F G B".split())
    a = golden_decompositions(types[T2], h)
    b = golden_decompositions(types[T3], h)
    assert [d.swapped() for d in a] == b
    assert all(isinstance(d, GoldenDecomposition) for d in a)


def test_one_tone_correspondence():
    assert one_tone_correspondence((10, 7, 3, 11), (0, 3, 7, 11)) is not None
    assert one_tone_correspondence((0, 8, 4, 1), (0, 3, 7, 11)) is None


def test_generalized_duality(types):
    mm = (parse_tones("Bb G Eb B".split()), parse_tones("C Eb G B".split()))
    aug = (parse_tones("C G# E C#".split()), parse_tones("C E G# B".split()))
    assert generalized_dual_check(*mm, types[T4], types[T2])
    assert generalized_dual_check(*aug, types[T3], types[T1])
    assert generalized_dual_check((0, 4, 7), (0, 3, 7), types[T1], types[T1])
    # a harmony is never its own generalized dual on one type
    assert not generalized_dual_check((0, 4, 7), (0, 4, 7), types[T1], types[T1])
    with pytest.raises(ArityError):
        generalized_dual_check((0, 4, 7), (0, 3, 7, 10), types[T1], types[T1])


def test_seventh_chord_constants():
    assert set(SEVENTH_CHORDS) == {"maj7", "min7", "dom7", "dim7", "halfdim7", "minMaj7", "augMaj7"}
