"""Exact computations in the periplectic Lie superalgebras p~(n) and p(n)."""

from .symcore import GrassmannPoly, GrassmannRing, WeightPoly, grassmann_mul, poly_equal, poly_eval
from .rootdata import (delta_poly, dot_action, is_typical, rho0, roots, same_central_character,
                       theta_poly)
from .superalg import GMatrix, SuperAlgebra, p_n_basis, superalgebra
from .uea import UEA, UEAElem, big_X, big_Y, enveloping, h0_project, hc_project
from .verma import VermaModule, VermaVector, act, singular_vector_check, weight_of
from .report import CheckReport

__version__ = "0.1.0"

__all__ = [
    "GrassmannPoly", "GrassmannRing", "WeightPoly", "grassmann_mul", "poly_equal", "poly_eval",
    "delta_poly", "dot_action", "is_typical", "rho0", "roots", "same_central_character", "theta_poly",
    "GMatrix", "SuperAlgebra", "p_n_basis", "superalgebra",
    "UEA", "UEAElem", "big_X", "big_Y", "enveloping", "h0_project", "hc_project",
    "VermaModule", "VermaVector", "act", "singular_vector_check", "weight_of",
    "CheckReport",
]
