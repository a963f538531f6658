"""Exact computations in the Connes-Kreimer Hopf algebras of rooted trees:
combinatorial Dyson-Schwinger equations and their Hopf subalgebras."""
from ._backend import COMPILED
from .algebra import (DOT, AlgebraElement, TensorElement, abelianize, coproduct,
                      coproduct_by_cuts, counit, product, tensor, z_functional)
from .dse import (DseSolution, b_generators, c_generators, closed_coeff, family_solution,
                  lp_inverse_one, solve)
from .hopfcheck import (GradedSpan, HopfVerdict, bracket_constants, fdb_bracket, graded_span,
                        is_hopf, spans_equal, tensor_membership)
from .series import TruncatedSeries, family_parameters, polynomial, solve_family
from .trees import (COMMUTATIVE, PLANAR, Tree, b_minus, b_plus, enumerate_forests,
                    enumerate_trees, from_nested, ladder)

__version__ = "0.1.0"

__all__ = [
    "COMPILED", "DOT", "AlgebraElement", "TensorElement", "abelianize", "coproduct",
    "coproduct_by_cuts", "counit", "product", "tensor", "z_functional", "DseSolution",
    "b_generators", "c_generators", "closed_coeff", "family_solution", "lp_inverse_one", "solve",
    "GradedSpan", "HopfVerdict", "bracket_constants", "fdb_bracket", "graded_span", "is_hopf",
    "spans_equal", "tensor_membership", "TruncatedSeries", "family_parameters", "polynomial",
    "solve_family", "COMMUTATIVE", "PLANAR", "Tree", "b_minus", "b_plus", "enumerate_forests",
    "enumerate_trees", "from_nested", "ladder",
]
