"""ringlat: decide whether an integer lattice is a coefficient-embedding
ideal lattice and compute every monic polynomial quotient ring it embeds
into as an ideal.

The hot elimination kernels have a compiled (Cython) and a pure-Python
implementation; ``KERNEL_BACKEND`` names the one in use (see
ringlat._kernels for the selection rules).
"""

__version__ = "0.1.0"

from ringlat._kernels import BACKEND as KERNEL_BACKEND
from ringlat.dinglindner import dl_identify, flaw_witness
from ringlat.errors import (
    DimensionMismatchError,
    NotFullRankError,
    NotSquareError,
    ParseError,
    RinglatError,
)
from ringlat.harness import (
    DensityRow,
    ExperimentConfig,
    density_experiment,
    random_basis,
    random_principal,
    timing_experiment,
)
from ringlat.identify import RingClass, canonical_rep, class_contains, identify, sample_class, verify_ring
from ringlat.linalg import (
    ExtGcdResult,
    IhnfResult,
    Membership,
    SnfResult,
    adjugate,
    determinant,
    divisibility_precheck,
    ext_gcd,
    hnf,
    hnf_with_transform,
    ihnf,
    in_lattice,
    integral_rows_check,
    snf,
)
from ringlat.matrix import IntMatrix
from ringlat.polyring import (
    MonicPoly,
    format_poly,
    mul_x_mod,
    parse_poly,
    poly_mul_mod,
    principal_ideal_basis,
)

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    "IntMatrix",
    "MonicPoly",
    "RingClass",
    "ExtGcdResult",
    "IhnfResult",
    "SnfResult",
    "Membership",
    "ExperimentConfig",
    "DensityRow",
    "RinglatError",
    "NotSquareError",
    "NotFullRankError",
    "DimensionMismatchError",
    "ParseError",
    "ext_gcd",
    "determinant",
    "adjugate",
    "hnf",
    "hnf_with_transform",
    "ihnf",
    "snf",
    "in_lattice",
    "integral_rows_check",
    "divisibility_precheck",
    "parse_poly",
    "format_poly",
    "mul_x_mod",
    "poly_mul_mod",
    "principal_ideal_basis",
    "identify",
    "verify_ring",
    "class_contains",
    "canonical_rep",
    "sample_class",
    "dl_identify",
    "flaw_witness",
    "random_basis",
    "random_principal",
    "density_experiment",
    "timing_experiment",
]
