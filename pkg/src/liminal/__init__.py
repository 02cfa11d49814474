"""Exact invariants of quasi-homogeneous isolated hypersurface singularities."""

from .core import SingularityClass, WeightSystem, classify, liminal_defect, minimal_exponent
from .diagonal import DiagonalFamily, enumerate_diagonal_liminal, family_report
from .dualcx import (
    DualComplexData,
    check_zero_liminal_constraints,
    dual_complex_cohomology,
    e1_page,
)
from .errors import (
    DimensionTooLarge,
    InvalidComplex,
    LiminalError,
    NonIntegerMilnorNumber,
    NonPolynomialQuotient,
    NormalizationError,
    WeightSystemError,
)
from .milnor import PoincarePolynomial, Spectrum, milnor_number, poincare_polynomial, s_vector, spectrum
from .suite import (
    dim_A_system,
    global_t1_dim,
    local_image_dims,
    moduli_E_dim,
    series_report,
    verify_identity,
)
from .t1 import T1Decomposition, t1_decomposition, t_minus, weight_of_monomial

__version__ = "0.1.0"
