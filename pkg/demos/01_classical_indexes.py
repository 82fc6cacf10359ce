"""
Tits p-indexes of classical groups
==================================

A central simple algebra of index d with an involution whose Witt index is r
gives the distinguished vertices d, 2d, ..., rd.  Over a p-special field only
the p-part of d survives.
"""

from titsindex import enumerate_indexes, render_text

# type 1A5: a degree-6 algebra.  At p = 3 only d_3 in {1, 3} can occur.
for ix in enumerate_indexes("A", 5, p=3):
    print(ix)
    print(render_text(ix))
    print()

# symplectic involutions on a degree-8 algebra (type C4)
for ix in enumerate_indexes("C", 4, p=2):
    print(f"{str(ix):22s} {render_text(ix)}")
print()

# orthogonal involutions of nontrivial discriminant (type 2D5): once rd = n-1
# the swapped fork pair is circled as one orbit
for ix in enumerate_indexes("2D", 5, p=2):
    print(ix)
    print(render_text(ix))
    print()
