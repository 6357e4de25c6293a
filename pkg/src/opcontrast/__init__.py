"""Generalized Michelson contrast for positive semidefinite operators.

The contrast of a positive matrix is the infimum over positive scalings
A of ``||1 - x/A||``, which collapses to the spectral ratio
``(sup - inf) / (sup + inf)`` of its eigenvalue range. The package
computes this measure and its relatives for Hermitian matrices, finite
direct sums of PSD blocks, rectangular matrices (through their Gram
spectra) and multichannel images, and ships the numeric oracles used to
verify the underlying operator inequalities.
"""

from .report import TOOL_VERSION as __version__

from .linalg import (
    HermitianMatrix,
    RectMatrix,
    SpectralBounds,
    eig_sym,
    inverse,
    is_psd,
    operator_norm,
    spectral_bounds,
    sqrt_psd,
)
from .contrast import (
    ContrastReport,
    ReportPath,
    ScanConfig,
    cone_member,
    cross_term_bound,
    delta,
    delta2,
    delta_clamped,
    delta_inverse_formula,
    delta_power2,
    delta_product,
    delta_scan,
    optimal_scale,
    weighted_subadditivity_terms,
)
from .blocks import (
    BlockOperator,
    BlockProductSuite,
    CentralSearchConfig,
    ChannelStack,
    delta2_prime,
    delta_central,
    delta_direct_sum_bound,
    delta_prime,
    delta_prime_ops,
)
from .imaging import (
    ImageChannels,
    image_contrast_report,
    michelson_contrast,
    parse_pnm,
    write_pnm,
)
from .report import Metric, ReportDocument

__all__ = [
    "__version__",
    "HermitianMatrix",
    "RectMatrix",
    "SpectralBounds",
    "eig_sym",
    "spectral_bounds",
    "operator_norm",
    "sqrt_psd",
    "inverse",
    "is_psd",
    "ContrastReport",
    "ReportPath",
    "ScanConfig",
    "delta",
    "delta_clamped",
    "delta_inverse_formula",
    "delta_scan",
    "optimal_scale",
    "delta_product",
    "delta_power2",
    "cone_member",
    "weighted_subadditivity_terms",
    "delta2",
    "cross_term_bound",
    "BlockOperator",
    "BlockProductSuite",
    "CentralSearchConfig",
    "ChannelStack",
    "delta_prime",
    "delta_central",
    "delta_direct_sum_bound",
    "delta_prime_ops",
    "delta2_prime",
    "ImageChannels",
    "parse_pnm",
    "write_pnm",
    "michelson_contrast",
    "image_contrast_report",
    "Metric",
    "ReportDocument",
]
