"""Exact root-system combinatorics for affine energy minimization:
roots and Weyl groups of the locally affine families, closed-form energy
infima, minimal-energy cones, positive-energy decisions for cohort
profiles, and the reduction of twisted affinisation data."""

from .energy import CharTriple, WeightTriple, char, energy, infimum, normalize, weight
from .errors import InputError, InternalInconsistencyError
from .profiles import CohortProfile, PecVerdict, pec_decide, profile
from .rootdata import AffineRoot, AffineType, FiniteRoot, FiniteType, Shape
from .weyl import WeylElement

__all__ = [
    "AffineRoot", "AffineType", "CharTriple", "CohortProfile", "FiniteRoot",
    "FiniteType", "InputError", "InternalInconsistencyError", "PecVerdict",
    "Shape", "WeightTriple", "WeylElement", "char", "energy", "infimum",
    "normalize", "pec_decide", "profile", "weight",
]

__version__ = "0.1.0"
