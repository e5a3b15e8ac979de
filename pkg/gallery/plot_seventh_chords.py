"""
Seventh chords and golden singularity
=====================================

A harmony is split into as few golden figures as possible.  Some chords
cannot be split at all on a given type.
"""

# %%
from goldenico import ExceptionalType, golden_decompositions, structure_for
from goldenico.analysis import MYSTIC_CHORD, seventh_chord_table, seventh_table_text

table = seventh_chord_table()
print(seventh_table_text(table))

# %%
# The dominant seventh has no decomposition on 1*; on 2* it is two triangles.
for t in (ExceptionalType.T1, ExceptionalType.T2):
    print(t.label, [str(d) for d in table[t]["dom7"]] or "golden singular")

# %%
# Major sevenths admit three minimum covers.
for d in table[ExceptionalType.T1]["maj7"]:
    print(d.shape.label, d)

# %%
# Scriabin's mystic chord: five minimum covers, three of them through a rectangle.
for d in golden_decompositions(structure_for(2), MYSTIC_CHORD):
    print(d.shape.label, d)

# %%
# Write a picture of the rectangle cover to disk.
from pathlib import Path

from goldenico.render import render_svg

best = golden_decompositions(structure_for(2), MYSTIC_CHORD)[1]
Path("mystic_t2.svg").write_text(render_svg(structure_for(2), best, "mystic chord on 2*"))
