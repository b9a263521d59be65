"""
Tangent lines and the PGL_2 symmetry
====================================
"""

import numpy as np

from bhcurve.aut import group_audit, lift, pgl2_elements
from bhcurve.curve import line_meet_curve, tangent_line, tangent_trichotomy
from bhcurve.field import extension

# a tangent line over a point of F_{q^4}: order q at the point, one more crossing
q = 3
L = extension(q, 4)
t = L.gen.code
line = tangent_line(t, q, L)
print(line)
for m in line_meet_curve(line, q, L):
    print("  ", m)

# the three kinds of tangent, counted over P^1(F_{q^4})
print(tangent_trichotomy(q, 4).counts)

# PGL_2(F_q) lifts to automorphisms of the plane preserving the curve
G = pgl2_elements(q)
mats = np.array([lift(g).entries for g in G]).reshape(-1, 3, 3)
print(len(G), "elements; first lift:\n", mats[1])
print(group_audit(q))
