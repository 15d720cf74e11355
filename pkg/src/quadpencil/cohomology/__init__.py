from .classes import SWReport, sw_report, sym2_class, tangent_class, tensor_class, to_elementary
from .poly import GradedMod2Poly, inverse_class, monomials_of_degree, weighted_degree
from .ring import GrassmannRing

__all__ = [
    "GradedMod2Poly",
    "GrassmannRing",
    "SWReport",
    "inverse_class",
    "monomials_of_degree",
    "sw_report",
    "sym2_class",
    "tangent_class",
    "tensor_class",
    "to_elementary",
    "weighted_degree",
]
