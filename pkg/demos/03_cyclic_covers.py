"""
Cyclic covers w^d = F
=====================

For d dividing q+1, the cover of the plane branched along B_q has one
A_{d-1} point over each node, and it is unirational.
"""

from bhcurve.cover import build_cover, fiber_splitting_check, projection_degree_check, unirationality_check
from bhcurve.poly import AT_INFINITY

cv = build_cover(3, 4)
print(cv.equation_text())
for s in cv.singular_points:
    print("  ", s.text(cv.field), s.label)

# the universal tangent line maps to the plane with degree 2q, inseparable degree q
print(projection_degree_check(3))

# exact rational identities for every admissible (q, d)
for q in (2, 3, 4, 5, 7, 8, 9):
    for d in range(2, q + 2):
        if (q + 1) % d == 0:
            print(q, d, unirationality_check(q, d).ok)

# over each F_{q^2}-rational tangent line the cover falls apart into d curves
r = fiber_splitting_check(AT_INFINITY, 5, 3)
print(r.line, "->", r.components, "components")
