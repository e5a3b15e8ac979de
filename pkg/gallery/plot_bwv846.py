"""
Golden analysis of the C major prelude
======================================

Each measure of BWV 846 is covered by golden figures, choosing covers so
that the whole prelude uses as few combination shapes as possible.
"""

# %%
from goldenico import ExceptionalType, analyze_piece, bwv846, duality_report
from goldenico.piece import AnalysisError, analysis_text

prelude = bwv846()
measures, summary = analyze_piece(prelude, ExceptionalType.T2)
print(analysis_text(measures, summary))

# %%
# Type 1* cannot analyse the prelude: its dominant sevenths are singular there.
try:
    analyze_piece(prelude, ExceptionalType.T1)
except AnalysisError as exc:
    print(exc)

# %%
# On 3* every measure gets the same cover with triangles and gnomons exchanged.
print(all(row.consistent for row in duality_report(prelude)))

# %%
# Preferring golden rectangles wherever a minimum cover allows one gives a
# richer palette of seven shapes.
_, richer = analyze_piece(prelude, ExceptionalType.T2, prefer_rectangles=True)
print(richer.histogram)
