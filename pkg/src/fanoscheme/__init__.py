"""Exact invariants of Fano schemes of linear spaces on determinantal and permanental loci."""

__version__ = "0.1.0"

from .classify import TriState, Verdict, classify, det_is_connected, perm_is_connected
from .errors import DomainError, EmptySchemeError, FanoError, InvariantError, ParseError, ResourceError
from .params import FanoParams, compression_component_dim, delta, is_nonempty, kappa, lines_component_dims
from .patterns import StarPattern, count_fixed_points, fixed_orbits, is_fano_fixed_point
from .schubert import compression_degree, f1_degree, gr_degree
from .symalg import LinForm, LinMatrix, MultiPoly, det_poly, perm_poly, plane_in_scheme
from .tangent import CompressedPlane, TangentReport, a_dimension, tangent_dim, witness_det, witness_perm

__all__ = [
    "CompressedPlane", "DomainError", "EmptySchemeError", "FanoError", "FanoParams",
    "InvariantError", "LinForm", "LinMatrix", "MultiPoly", "ParseError", "ResourceError",
    "StarPattern", "TangentReport", "TriState", "Verdict", "a_dimension", "classify",
    "compression_component_dim", "compression_degree", "count_fixed_points", "delta",
    "det_is_connected", "det_poly", "f1_degree", "fixed_orbits", "gr_degree", "is_fano_fixed_point",
    "is_nonempty", "kappa", "lines_component_dims", "perm_is_connected", "perm_poly",
    "plane_in_scheme", "tangent_dim", "witness_det", "witness_perm",
]
