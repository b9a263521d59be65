"""Exact computations on the Ballico-Hefez curves over finite fields.

Modules: ``field`` (finite fields), ``poly`` (exact polynomials), ``curve`` (the
curve, its nodes and tangents), ``aut`` (the PGL_2 symmetry), ``cover`` (cyclic
covers and unirationality), ``lattice`` (two K3 Gram matrices) and ``cli``.
"""

__version__ = "0.1.0"
