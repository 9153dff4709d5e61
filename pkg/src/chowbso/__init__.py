"""Exact computations in the Chow ring of BSO(2n) and its torus model."""
from .kernels import BACKEND
from .polyarith import MultiPoly, parse_poly
from .repweights import (
    euler_coefficient_closed,
    euler_coefficient_kutin,
    euler_coefficient_product,
)
from .ringpres import chow_ring, class_map, cohomology_ring, theorem3_report
from .weylflag import eg_class_input, enumerate_weyl_D, pushforward_flag

__all__ = [
    "BACKEND",
    "MultiPoly",
    "chow_ring",
    "class_map",
    "cohomology_ring",
    "eg_class_input",
    "enumerate_weyl_D",
    "euler_coefficient_closed",
    "euler_coefficient_kutin",
    "euler_coefficient_product",
    "parse_poly",
    "pushforward_flag",
    "theorem3_report",
]
