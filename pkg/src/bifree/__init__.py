"""Exact partial bi-free S- and T-transforms and the convolutions they linearize."""

from .convolutions import (
    ConvolutionResult,
    bb_mult,
    bp_mult,
    free_add_1d,
    free_mult_1d,
)
from .distributions import (
    Marginal,
    TwoBand,
    H_series,
    chi_series,
    h_series,
    k_tilde,
    moments_from_R,
    moments_from_S,
    s_transform_1d,
)
from .oracle import oracle_moments
from .series import (
    Series1,
    Series2,
    compose1,
    invert1,
    reciprocal,
    shift_divide,
    shift_multiply,
    subst2,
)
from .transforms import (
    PartialTransform,
    partial_R_reduced,
    partial_S,
    partial_T,
)

__version__ = "0.1.0"
