"""Exact computation with the combinatorial skeleton of Kac-Moody monoid
completions: Cartan matrices and realizations, the Weyl group and the face
lattice of the Tits cone, the Weyl/torus/normalizer monoids, lattice-monoid
(toric) machinery, and a depth-truncated highest-weight operator engine.
"""

from . import cartan, exact, faces, highest_weight, monoids, toric, weyl
from .cartan import (GCM, Classification, ComponentType, RootDatum,
                     build_realization, classify, special_sets,
                     validate_and_symmetrize)
from .errors import KmxError

__all__ = [
    "GCM", "Classification", "ComponentType", "RootDatum", "KmxError",
    "build_realization", "classify", "special_sets", "validate_and_symmetrize",
    "cartan", "exact", "faces", "highest_weight", "monoids", "toric", "weyl",
]

__version__ = "0.1.0"
