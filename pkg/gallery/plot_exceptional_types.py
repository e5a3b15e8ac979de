"""
The four exceptional musical icosahedra
=======================================

Search every labelling of the icosahedron in which a whole-tone step is a
symmetry, keep those on which all 24 major and minor triads are golden, and
look at what survives.
"""

# %%
# The search runs in well under a second.
from goldenico import ExceptionalType, search_exceptional, structure_for
from goldenico.assignment import TRITONE_SWAP, describe

classes = search_exceptional()
print(len(classes), "classes of", [len(c.members) for c in classes], "assignments")

# %%
# Each type puts every triad on a triangle or a gnomon.  Types 1* and 2*
# share C major as a triangle; 4* and 3* are their mirror images.
t1, t2, t3, t4 = (structure_for(t) for t in ExceptionalType)
print(t4 == t1.swapped(), t3 == t2.swapped())

# %%
# Exchanging the tritone partners of the even whole-tone scale turns 1* into 2*.
print(t1.relabeled(TRITONE_SWAP) == t2)
print(describe(t1).splitlines()[0])

# %%
# Moving every tone up a semitone exchanges triangles and gnomons.
print(t1.transposed(1) == t1.swapped(), t1.transposed(2) == t1)
