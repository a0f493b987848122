"""Desk-scale computational model of the Torelli geometry of a closed surface."""

from .surface import Triangulation, build_closed_surface, homology_basis

__version__ = "0.1.0"

__all__ = [
    "Triangulation",
    "build_closed_surface",
    "homology_basis",
    "__version__",
]
