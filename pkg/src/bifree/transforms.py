"""Two-variable partial transforms of a two-band distribution.

All three are computed in forms that are ordinary power series at the
origin.  Writing ``chi_a``, ``chi_b`` for the inverses of ``psi_a``,
``psi_b`` and ``y_a = 1/K_a``, ``Ktilde_a = z K_a(z)``:

* S-transform::

      Hc = H(chi_a(z), chi_b(w))
      S  = (1+z)(1+w) * [(Hc - 1 - z - w) / (z w)] / Hc

  The bracket is an honest power series because ``H(t, s) - h_a(t) - h_b(s)
  + 1`` is divisible by ``t s`` and ``h_a(chi_a(z)) = 1 + z``.

* T-transform, with ``D = H(y_a(z), chi_b(w)) / Ktilde_a(z)`` the unit series
  ``F(K_a(z), chi_b(w)) / z``::

      T = (1+w) * [(D - 1) / w] / D

  ``D(z, 0) = 1`` identically, which makes the bracket a power series.

* reduced R-transform, with ``E = H(y_a(z), y_b(w)) / (Ktilde_a Ktilde_b)``::

      Rtilde = 1 - 1/E
"""

from dataclasses import dataclass

from . import distributions as dist
from .distributions import LEFT, RIGHT
from .errors import NotDivisible, ZeroMeanError
from .series import Series2, is_zero, reciprocal, shift_divide, subst2

S = "S"
T = "T"
RTILDE = "Rtilde"


@dataclass(frozen=True)
class PartialTransform:
    kind: str
    series: Series2
    source_order: int

    @property
    def order(self):
        return self.series.order

    def __getitem__(self, idx):
        return self.series[idx]


def _lift_unit(f, var):
    return Series2.lift(f, var)


def _require_mean(d, side, what):
    letter = "a" if side == LEFT else "b"
    if d.order < 1 or is_zero(d.marginal(side).mean):
        raise ZeroMeanError(f"φ({letter}) = 0: {what} requires φ({letter}) ≠ 0")


def _internal_divide(f, i, j, what):
    try:
        return shift_divide(f, i, j)
    except NotDivisible as exc:
        raise NotDivisible(
            f"{what}: {exc} (divisibility holds for every valid input; "
            f"this indicates an arithmetic fault)", exc.index) from exc


def partial_S(d):
    """Partial bi-free S-transform; requires both means nonzero.

    The output has order ``d.order - 1`` and constant term
    ``m[1][1] / (m[1][0] m[0][1])``.
    """
    _require_mean(d, LEFT, "the partial S-transform")
    _require_mean(d, RIGHT, "the partial S-transform")
    chi_a = dist.chi_series(d, LEFT)
    chi_b = dist.chi_series(d, RIGHT)
    n = d.order
    Hc = subst2(dist.H_series(d), chi_a, chi_b)
    one_z_w = Series2([[1, 1], [1]], order=n)
    eta = _internal_divide(Hc - one_z_w, 1, 1, "partial S")
    beta = Series2([[1, 1], [1, 1]], order=eta.order)
    series = beta * eta * reciprocal(Hc)
    return PartialTransform(S, series, n)


def F_unit_series(d):
    """``D(z, w) = F(K_a(z), chi_b(w)) / z`` as a unit power series."""
    y_a = dist.y_series(d, LEFT)
    ktilde_a = dist.k_tilde(d, LEFT).ktilde
    chi_b = dist.chi_series(d, RIGHT)
    core = subst2(dist.H_series(d), y_a, chi_b)
    return core * reciprocal(_lift_unit(ktilde_a, "z").truncate(core.order))


def partial_T(d):
    """Partial bi-free T-transform; requires the right mean nonzero.

    No condition on the left mean.  Output order is ``d.order - 1``.
    """
    _require_mean(d, RIGHT, "the partial T-transform")
    D = F_unit_series(d)
    theta = _internal_divide(D - 1, 0, 1, "partial T")
    series = Series2([[1, 1]], order=theta.order) * theta * reciprocal(D)
    return PartialTransform(T, series, d.order)


def G_unit_series(d):
    """``E(z, w) = G(K_a(z), K_b(w)) / (z w)`` as a unit power series."""
    y_a = dist.y_series(d, LEFT)
    y_b = dist.y_series(d, RIGHT)
    kt_a = _lift_unit(dist.k_tilde(d, LEFT).ktilde, "z")
    kt_b = _lift_unit(dist.k_tilde(d, RIGHT).ktilde, "w")
    core = subst2(dist.H_series(d), y_a, y_b)
    return core * reciprocal(kt_a * kt_b)


def partial_R_reduced(d):
    """Reduced partial R-transform ``1 - zw / G(K_a(z), K_b(w))``.

    Defined for every two-band law; its ``z**0`` and ``w**0`` rows vanish.
    """
    E = G_unit_series(d)
    return PartialTransform(RTILDE, 1 - reciprocal(E), d.order)


def compute(kind, d):
    """Dispatch by name: ``"s"``, ``"t"`` or ``"rtilde"`` (case-insensitive)."""
    table = {"s": partial_S, "t": partial_T, "rtilde": partial_R_reduced}
    try:
        fn = table[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown transform {kind!r}") from None
    return fn(d)
