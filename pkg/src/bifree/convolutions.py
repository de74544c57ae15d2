"""Bi-free convolutions computed through the partial transforms.

``bb_mult`` multiplies partial S-transforms, ``bp_mult`` multiplies partial
T-transforms.  The product transform is then unwound back into two-band
moments by solving the transform definitions for the bivariate generating
series and composing with the (known) marginals of the result.
"""

from dataclasses import dataclass

from . import distributions as dist
from . import transforms
from .distributions import LEFT, RIGHT, TwoBand
from .errors import InternalInvariantError
from .series import (
    Series1,
    Series2,
    is_zero,
    reciprocal,
    shift_multiply,
    subst2,
)

BBMULT = "bbmult"
BPMULT = "bpmult"


@dataclass(frozen=True)
class ConvolutionResult:
    result: TwoBand
    op: str
    reliable_order: int


def free_mult_1d(x, y):
    """Free multiplicative convolution of two marginals via ``S_x S_y``."""
    S = dist.s_transform_1d(x) * dist.s_transform_1d(y)
    return dist.moments_from_S(S, side=x.side)


def free_add_1d(x, y):
    """Free additive convolution of two marginals via ``R_x + R_y``."""
    R = dist.k_tilde(x).R + dist.k_tilde(y).R
    return dist.moments_from_R(R, side=x.side)


def _assert_unit(f, what):
    c = f[0, 0] if isinstance(f, Series2) else f[0]
    if is_zero(c - 1):
        return
    raise InternalInvariantError(f"{what}: expected constant term 1, got {c}")


def _package(H, op):
    rows = [list(r) for r in H.coeffs]
    _assert_unit(H, op)
    return ConvolutionResult(TwoBand(rows), op, H.order)


def bb_mult(mu, nu):
    """Bi-multiplicative bi-free convolution ``mu ⊠⊠ nu``.

    Solving the S-transform definition for the composed series gives

        Hc = (1 + z + w) / (1 - z w S / ((1+z)(1+w)))

    and ``H(t, s) = Hc(psi_a(t), psi_b(s))`` with ``psi`` taken from the
    marginals of the product.  ``z w S`` recovers one order, so the result
    is reliable to the full input order.
    """
    S12 = transforms.partial_S(mu).series * transforms.partial_S(nu).series
    left = free_mult_1d(mu.marginal(LEFT), nu.marginal(LEFT))
    right = free_mult_1d(mu.marginal(RIGHT), nu.marginal(RIGHT))
    zwS = shift_multiply(S12, 1, 1)
    n = zwS.order
    beta = Series2([[1, 1], [1, 1]], order=n)
    denom = 1 - zwS * reciprocal(beta)
    _assert_unit(denom, "bbmult denominator")
    Hc = Series2([[1, 1], [1]], order=n) * reciprocal(denom)
    H = subst2(Hc, dist.psi_series(left), dist.psi_series(right))
    return _package(H, BBMULT)


def bp_mult(mu, nu):
    """Additive-multiplicative bi-free convolution ``mu ⊞⊠ nu``.

    With ``D = F(K_a(z), chi_b(w)) / z`` for the result, the T-transform
    definition gives ``D = 1 / (1 - w T / (1 + w))``.  Substituting
    ``w = psi_b(s)`` yields ``C(z, s) = H(y_a(z), s) / Ktilde_a(z)``; then
    ``z = invy(t) = t h_a(t)`` undoes ``y_a`` and leaves ``H(t, s)``.
    """
    T12 = transforms.partial_T(mu).series * transforms.partial_T(nu).series
    left = free_add_1d(mu.marginal(LEFT), nu.marginal(LEFT))
    right = free_mult_1d(mu.marginal(RIGHT), nu.marginal(RIGHT))
    n = T12.order
    wT = shift_multiply(T12, 0, 1)
    denom = 1 - wT * reciprocal(Series2([[1, 1]], order=n))
    _assert_unit(denom, "bpmult denominator")
    D = reciprocal(denom)
    C = subst2(D, Series1.identity(n), dist.psi_series(right))
    kt = dist.k_tilde(left)
    scaled = Series2.lift(kt.ktilde, "z").truncate(n) * C
    H = subst2(scaled, kt.invy, Series1.identity(n))
    return _package(H, BPMULT)


def convolve(op, mu, nu):
    if op == BBMULT:
        return bb_mult(mu, nu)
    if op == BPMULT:
        return bp_mult(mu, nu)
    raise ValueError(f"unknown convolution {op!r}")

