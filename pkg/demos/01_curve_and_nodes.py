"""
The curve B_q and its nodes
===========================

Build the rational curve of degree q+1, check its equation, and look at where
it crosses itself.
"""

from bhcurve.curve import bh_parametrization, defining_form, nodes, verify_on_curve
from bhcurve.field import make_field

q = 3
K = make_field(3, 2)  # F_9, generator a with a^2 = -1

# the parametrization and the equation it satisfies
phi = bh_parametrization(q, K)
print("phi =", [c.format(("s", "t")) for c in phi.coords])
F = defining_form(q)
print("F   =", F.format(("x0", "x1", "x2")))
print("F(phi) == 0:", verify_on_curve(q))

# every node is hit by a conjugate pair {tau, tau^q} of parameters in F_9 \ F_3
for nd in nodes(q, K):
    print(nd)

# the count (q^2 - q)/2 across several q
for q in (2, 3, 4, 5, 7, 8, 9):
    print(q, len(nodes(q)), (q * q - q) // 2)
