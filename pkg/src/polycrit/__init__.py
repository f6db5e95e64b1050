"""Critical points of polynomials via matrix analysis.

The package builds normal matrices whose principal submatrices carry the
critical points of a prescribed polynomial, computes fields of values by
support sweeps, constructs inscribed midpoint-tangent ellipses, and
mechanically verifies the classical location theorems (Gauss-Lucas, root
interlacing, midpoint tangency, and the inscribed-ellipse focus
property) on arbitrary or randomly generated instances.
"""

from . import cli, figures, fov, generate, geom, matricial, numlin, poly, rng, theorems
from .config import DEFAULT_SWEEP_SAMPLES, TOL
from .errors import GenerationCapExceeded, NumericalError

__version__ = "1.0.0"

__all__ = [
    "DEFAULT_SWEEP_SAMPLES",
    "GenerationCapExceeded",
    "NumericalError",
    "TOL",
    "cli",
    "figures",
    "fov",
    "generate",
    "geom",
    "matricial",
    "numlin",
    "poly",
    "rng",
    "theorems",
]
