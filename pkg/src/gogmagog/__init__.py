"""Exact enumeration of Gog and Magog trapezoids and Gog pentagons.

The package provides brute-force enumerators for the object families,
exact generating-function formulas for their refined counts (constant
terms of multivariate Laurent expressions, operator formulas, and
lattice-path determinants), verifiers that cross-check the independent
routes against each other, and a CLI that exposes all of it.
"""

from .errors import (
    ExactDivisionError,
    GogmagogError,
    MalformedExpressionError,
    NonUnitError,
    NotApplicableError,
    PreconditionError,
    ResourceBudgetError,
)
from .polyring import BigInt, BigRat, Eisenstein, ParamPoly, gen_binom

__version__ = "0.1.0"

__all__ = [
    "BigInt",
    "BigRat",
    "Eisenstein",
    "ExactDivisionError",
    "GogmagogError",
    "MalformedExpressionError",
    "NonUnitError",
    "NotApplicableError",
    "ParamPoly",
    "PreconditionError",
    "ResourceBudgetError",
    "gen_binom",
    "__version__",
]
