"""Bonahon-Dreyer coordinates of PSL(n, R)-Fuchsian representations.

Exact and floating-point machinery for flag triple/double ratios, the
Veronese flag curve, shear-coordinate developing of pants decompositions,
twist gluing, and the slice of the invariant polytope realized by hyperbolic
structures.
"""

from .scalars import EXACT, FLOAT, Scalar, ScalarModeError
from .multilinear import (Matrix, band_det_bruteforce, band_det_formula,
                          compare_band, compare_rhombus, det, ext_binomial,
                          rhombus_det_bruteforce, rhombus_det_formula, wedge_coeff)
from .flags import DegenerateFlagError, Flag, FlagTuple, double_ratio, is_generic, triple_ratio
from .halfplane import (DegenerateConfigurationError, Mobius, ProjPoint, axis_data,
                        cross_ratio, is_clockwise, mobius_apply, mobius_to_standard,
                        orientation, shear_from_quadruple, twist_map)
from .veronese import SymPowerMatrix, irrep_n, length_spectrum, veronese_flag
from .surfaces import (AssemblyError, CurveData, DevelopedSurface, LaminationError,
                       PantsLamination, PantsShearing, SurfaceSpec, SurfaceSpecError,
                       UnreachableTwistError, assemble_surface, boundary_lengths,
                       develop_pants, genus2_spec, solve_twist, twist_deform,
                       validate_shears)
from .bd import (BDVector, ClosedLeafReport, SlicePoint, bd_vector,
                 closed_leaf_report, closed_leaf_sums, dimension_counts,
                 gluing_invariant, polytope_membership, realize_slice,
                 shearing_invariant, slice_membership, slice_point_of,
                 triangle_invariant)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
