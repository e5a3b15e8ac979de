"""Golden figures on the musical icosahedron."""
from .analysis import (
    MYSTIC_CHORD,
    SEVENTH_CHORDS,
    GoldenBaseHarmony,
    GoldenDecomposition,
    Shape,
    generalized_dual_check,
    golden_decompositions,
    is_golden_singular,
    mystic_chord_analysis,
    seventh_chord_table,
    singular_k_subsets,
)
from .assignment import (
    ArityError,
    ExceptionalType,
    GoldenStructure,
    LabelingError,
    MusicalIcosahedron,
    chord_figure_kind,
    exceptional_types,
    label_types,
    search_exceptional,
    structure_for,
)
from .icosahedron import (
    DistanceClass,
    FigureKind,
    GoldenFigure,
    NeighborhoodMode,
    SymmetryOperation,
    TripleShape,
    build_topology,
    classify_triple,
    enumerate_golden_figures,
    golden_neighborhood,
    symmetry_group,
)
from .neo_riemannian import Quality, Transform, Triad, apply_transform, realize_transform
from .piece import Piece, analyze_piece, bwv846, duality_report, load_piece, parse_piece
from .pitch import parse_tone, parse_tones

__version__ = "0.1.0"
