"""Invariants of two-variable mixed polynomial singularities.

Exact symbolic layers (polynomial algebra, weight detection, branch data,
factored characteristic polynomials, round-handle ledgers) plus a numeric
layer that locates fold orbits of deformed maps, with a FastAPI service
and CLI on top.
"""

from .mixedpoly import GaussianRational, MixedPolynomial, MixedTerm, ParseError, parse
from .homogeneity import WeightData, WeightVector, detect, detect_polar, detect_radial
from .seifert import LinkCounts, SeifertLinkData, extract
from .monodromy import CyclicPoly, Divisor

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "MixedPolynomial",
    "MixedTerm",
    "ParseError",
    "parse",
    "WeightData",
    "WeightVector",
    "detect",
    "detect_polar",
    "detect_radial",
    "LinkCounts",
    "SeifertLinkData",
    "extract",
    "CyclicPoly",
    "Divisor",
    "__version__",
]
