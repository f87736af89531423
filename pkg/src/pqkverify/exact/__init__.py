from .affine import ParamAffine, rat_str
from .graded import GradedPoly, Ring, RingMismatchError
from .linalg import InfeasibleSystem, QxSolution, Solution, bareiss_echelon, solve_over_qx, solve_parametric
from .unipoly import NumberField, RatFunc, Root, UniPoly, interpolate, rational_roots, real_roots

__all__ = [
    "GradedPoly",
    "InfeasibleSystem",
    "NumberField",
    "ParamAffine",
    "QxSolution",
    "RatFunc",
    "Ring",
    "RingMismatchError",
    "Root",
    "Solution",
    "UniPoly",
    "bareiss_echelon",
    "interpolate",
    "rat_str",
    "rational_roots",
    "real_roots",
    "solve_over_qx",
    "solve_parametric",
]
