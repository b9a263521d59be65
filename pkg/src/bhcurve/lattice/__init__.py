"""Curve configurations and Gram matrices for the two supersingular K3 covers."""

from .configs import CurveConfig, quartic_config, sextic_config
from .gram import GramMatrix, LatticeInvariants, gram_assemble, intersection_number, lattice_invariants
from .intmat import artin_sigma, bareiss_det, inertia
from .surfaces import Surface, SurfaceCurve, ambient_meet
from .tables import QUARTIC_GRAM, QUARTIC_LABELS, SEXTIC_GRAM, SEXTIC_LABELS

__all__ = [
    "CurveConfig",
    "GramMatrix",
    "LatticeInvariants",
    "QUARTIC_GRAM",
    "QUARTIC_LABELS",
    "SEXTIC_GRAM",
    "SEXTIC_LABELS",
    "Surface",
    "SurfaceCurve",
    "ambient_meet",
    "artin_sigma",
    "bareiss_det",
    "gram_assemble",
    "inertia",
    "intersection_number",
    "lattice_invariants",
    "quartic_config",
    "sextic_config",
]
