"""Gram matrix fixtures for the two K3 cases, with their row labels.

Label syntax: ``a`` is the chosen square root (of -1 for q = 3, of 2 for q = 5);
``E_{...}`` are exceptional curves, ``L_{tau}^{nu}`` the quartic lines and
``C_k`` the sextic curves in their listed order.
"""

QUARTIC_LABELS = ('E_{-a}', 'E_{0}', 'E_{a}', 'E_{1-a}', 'E_{1}', 'E_{1+a}', 'E_{2-a}', 'E_{2}', 'E_{2+a}', 'L_{0}^{0}', 'L_{0}^{1}', 'L_{0}^{2}', 'L_{0}^{3}', 'L_{1}^{0}', 'L_{1}^{1}', 'L_{2}^{0}', 'L_{2}^{1}', 'L_{inf}^{1}', 'L_{-a}^{0}', 'L_{-a}^{1}', 'L_{1-a}^{2}', 'L_{2-a}^{0}')

QUARTIC_GRAM = (
    (-2,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0),
    ( 1, -2,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  1, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0, -2,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0),
    ( 0,  0,  0,  1, -2,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  1, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0, -2,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  1, -2,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  1, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0, -2,  1,  1,  1,  0,  0,  0,  0,  0,  1,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -2,  1,  1,  0,  0,  0,  0,  1,  0,  1,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1, -2,  1,  1,  0,  1,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  1, -2,  0,  1,  0,  1,  0,  0,  0,  1,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -2,  1,  0,  0,  0,  0,  1,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1, -2,  0,  0,  1,  0,  0,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0, -2,  1,  0,  0,  0,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1, -2,  1,  1,  0,  1,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  1, -2,  0,  1,  0,  0),
    ( 1,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  1,  0, -2,  0,  0,  0),
    ( 1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0,  1,  0, -2,  1,  1),
    ( 0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  0,  1, -2,  0),
    ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  1,  0,  1,  1,  0,  0,  0,  1,  0, -2),
)

SEXTIC_LABELS = ('E_{+-a}', 'E_{+-2a}', 'E_{1+-a}', 'E_{1+-2a}', 'E_{2+-a}', 'E_{3+-2a}', 'E_{4+-a}', 'E_{4+-2a}', 'C_1', 'C_2', 'C_3', 'C_4', 'C_5', 'C_6', 'C_7', 'C_8', 'C_9', 'C_10', 'C_11', 'C_12', 'C_13', 'C_14')

SEXTIC_GRAM = (
    (-2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0),
    ( 0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0),
    ( 0,  0,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0),
    ( 0,  0,  0,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0, -2,  3,  1,  1,  0,  1,  1,  0,  0,  1,  1,  1,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  3, -2,  0,  0,  1,  0,  0,  1,  1,  0,  0,  0,  1,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -2,  0,  0,  0,  1,  1,  0,  1,  0,  0,  0,  1),
    ( 0,  1,  0,  0,  0,  0,  0,  0,  1,  0,  0, -2,  0,  0,  1,  1,  1,  1,  0,  1,  1,  0),
    ( 1,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0, -2,  0,  0,  0,  1,  1,  1,  1,  0,  1),
    ( 0,  1,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0, -2,  0,  1,  0,  0,  1,  0,  0,  0),
    ( 0,  0,  1,  0,  0,  0,  0,  0,  1,  0,  1,  1,  0,  0, -2,  1,  1,  0,  1,  0,  1,  1),
    ( 0,  0,  0,  1,  0,  0,  0,  0,  0,  1,  1,  1,  0,  1,  1, -2,  1,  0,  0,  1,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  1,  0,  1,  1, -2,  1,  1,  1,  0,  0),
    ( 0,  0,  0,  0,  1,  0,  0,  0,  1,  0,  1,  1,  1,  0,  0,  0,  1, -2,  0,  0,  0,  0),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  1,  1,  1,  0,  1,  0, -2,  0,  1,  0),
    ( 0,  0,  0,  0,  0,  1,  0,  0,  1,  0,  0,  1,  1,  0,  0,  1,  1,  0,  0, -2,  1,  1),
    ( 0,  0,  0,  0,  0,  0,  1,  0,  0,  1,  0,  1,  0,  0,  1,  0,  0,  0,  1,  1, -2,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  1,  0,  1,  0,  1,  0,  0,  0,  0,  1,  1, -2),
)
