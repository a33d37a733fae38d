"""Directional tight framelet filter banks with exact verification.

Construction of cube-vertex difference (Haar) banks in every dimension and
of box-spline banks via integer direction matrices, exact verification of
the tight-bank identities, fast periodized framelet transforms, and
dyadic-grid sampling of the underlying refinable functions and framelets.
"""

from .coeffs import IncommensurableTaps, NonSquareProduct, RadCoeff
from .filters import (
    Filter,
    FilterBank,
    NotTwoTap,
    bank_from_json,
    bank_to_json,
    load_bank,
    save_bank,
)
from .haar import (
    DimensionTooLarge,
    DirectionCensus,
    build_haar_bank,
    canonical_direction,
    direction_census,
    haar_lowpass,
    slope_angle_degrees,
)
from .projection import (
    DirectionMatrix,
    InvalidDirectionMatrix,
    MatrixValidity,
    boxspline_mask,
    preimage_vertices,
    project_filter,
    sum_rules_order_one,
    validate_direction_matrix,
)
from .boxspline import build_boxspline_bank, edge_rows, reduce_bank, write_edge_csv
from .verify import VerifyReport, bank_gram, verify_frequency, verify_tight_bank
from .transform import (
    BadDims,
    CoefficientPyramid,
    HAVE_COMPILED_KERNELS,
    ShapeMismatch,
    analyze,
    analyze_exact,
    available_backends,
    pyramid_energy,
    pyramid_energy_exact,
    read_tensor,
    synthesize,
    synthesize_exact,
    write_tensor,
)
from .cascade import (
    GridMismatch,
    MaskNotNormalized,
    SampledGrid,
    boxspline_fourier_eval,
    cascade_phi,
    sample_psi,
    write_grid_csv,
)

__version__ = "0.1.0"

__all__ = [
    "RadCoeff",
    "NonSquareProduct",
    "IncommensurableTaps",
    "Filter",
    "FilterBank",
    "NotTwoTap",
    "bank_to_json",
    "bank_from_json",
    "save_bank",
    "load_bank",
    "build_haar_bank",
    "haar_lowpass",
    "direction_census",
    "DirectionCensus",
    "canonical_direction",
    "slope_angle_degrees",
    "DimensionTooLarge",
    "DirectionMatrix",
    "MatrixValidity",
    "InvalidDirectionMatrix",
    "validate_direction_matrix",
    "project_filter",
    "preimage_vertices",
    "boxspline_mask",
    "sum_rules_order_one",
    "build_boxspline_bank",
    "reduce_bank",
    "edge_rows",
    "write_edge_csv",
    "verify_tight_bank",
    "verify_frequency",
    "bank_gram",
    "VerifyReport",
    "analyze",
    "synthesize",
    "pyramid_energy",
    "analyze_exact",
    "synthesize_exact",
    "pyramid_energy_exact",
    "CoefficientPyramid",
    "read_tensor",
    "write_tensor",
    "available_backends",
    "HAVE_COMPILED_KERNELS",
    "BadDims",
    "ShapeMismatch",
    "cascade_phi",
    "sample_psi",
    "SampledGrid",
    "boxspline_fourier_eval",
    "write_grid_csv",
    "MaskNotNormalized",
    "GridMismatch",
]
