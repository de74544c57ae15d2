"""Two-band joint distributions and the generating series built from them.

A :class:`TwoBand` of order ``N`` stores ``m[p][q] = phi(a**p b**q)`` for
``p, q <= N``.  Its marginals feed the classical one-variable machinery:

* ``h(t) = sum phi(a**k) t**k`` and ``psi = h - 1``;
* ``chi``, the compositional inverse of ``psi`` (needs ``phi(a) != 0``);
* the S-transform ``S(z) = (1 + z) chi(z) / z``;
* the unit series ``Ktilde = 1 + z R(z)`` built from the inverse of
  ``t h(t)``, which avoids ever representing ``K(z) = Ktilde(z) / z`` as a
  Laurent series.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import NotAUnit, PreconditionError, ZeroMeanError
from .series import (
    Series1,
    Series2,
    coerce,
    invert1,
    is_zero,
    reciprocal,
    shift_divide,
    shift_multiply,
)

LEFT = "left"
RIGHT = "right"


def _freeze(rows):
    return tuple(tuple(coerce(x) for x in r) for r in rows)


def _is_real(x):
    return not isinstance(x, complex) or x.imag == 0


@dataclass(frozen=True)
class Marginal:
    side: str
    moments: tuple

    def __post_init__(self):
        moments = tuple(coerce(x) for x in self.moments)
        if not moments:
            raise PreconditionError("a marginal needs at least moment 0")
        if not _close_to_one(moments[0]):
            raise PreconditionError(f"moment 0 must equal 1, got {moments[0]}")
        object.__setattr__(self, "moments", moments)

    @property
    def order(self):
        return len(self.moments) - 1

    @property
    def mean(self):
        return self.moments[1]


def _close_to_one(x):
    if isinstance(x, Fraction):
        return x == 1
    return abs(x - 1) <= 1e-12


@dataclass(frozen=True)
class TwoBand:
    """Two-band moment array ``m[p][q] = phi(a**p b**q)``."""

    m: tuple

    def __post_init__(self):
        m = _freeze(self.m)
        n = len(m) - 1
        if n < 0 or any(len(r) != n + 1 for r in m):
            raise PreconditionError("moment array must be square")
        if not _close_to_one(m[0][0]):
            raise PreconditionError(f"m[0][0] must equal 1, got {m[0][0]}")
        object.__setattr__(self, "m", m)

    @property
    def order(self):
        return len(self.m) - 1

    @property
    def is_exact(self):
        return all(isinstance(x, Fraction) for r in self.m for x in r)

    @property
    def is_real(self):
        return all(_is_real(x) for r in self.m for x in r)

    def __getitem__(self, idx):
        p, q = idx
        return self.m[p][q]

    def marginal(self, side):
        if side == LEFT:
            return Marginal(LEFT, tuple(r[0] for r in self.m))
        if side == RIGHT:
            return Marginal(RIGHT, self.m[0])
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def truncate(self, order):
        if order > self.order:
            raise PreconditionError(
                f"distribution has order {self.order}, {order} requested")
        return TwoBand(tuple(r[: order + 1] for r in self.m[: order + 1]))

    def to_float(self):
        return TwoBand(tuple(tuple(complex(x) if isinstance(x, complex)
                                   else float(x) for x in r) for r in self.m))

    @classmethod
    def from_atoms(cls, atoms, order):
        """Finitely supported law ``sum w_i delta_(x_i, y_i)``.

        Weights must sum to one; they may be negative (signed measures).
        """
        atoms = [tuple(coerce(v) for v in a) for a in atoms]
        total = sum(w for _, _, w in atoms)
        if not _close_to_one(total):
            raise PreconditionError(f"atom weights sum to {total}, not 1")
        m = [[sum(w * x ** p * y ** q for x, y, w in atoms)
              for q in range(order + 1)] for p in range(order + 1)]
        return cls(m)

    @classmethod
    def point_mass(cls, x, y, order):
        return cls.from_atoms([(x, y, 1)], order)

    @classmethod
    def factorizing(cls, left, right, order=None):
        """``m[p][q] = left[p] * right[q]``."""
        left = [coerce(x) for x in left]
        right = [coerce(x) for x in right]
        if order is None:
            order = min(len(left), len(right)) - 1
        return cls([[left[p] * right[q] for q in range(order + 1)]
                    for p in range(order + 1)])


def _as_marginal(source, side):
    if isinstance(source, Marginal):
        return source
    if isinstance(source, TwoBand):
        return source.marginal(side)
    raise TypeError("expected a TwoBand or a Marginal")


def h_series(source, side=LEFT):
    """``h(t) = sum_k phi(a**k) t**k``; ``psi`` is ``h - 1``."""
    return Series1(_as_marginal(source, side).moments)


def psi_series(source, side=LEFT):
    return h_series(source, side) - 1


def chi_series(source, side=LEFT):
    """Compositional inverse of ``psi``; satisfies ``h(chi(z)) = 1 + z``."""
    marg = _as_marginal(source, side)
    if marg.order < 1 or is_zero(marg.mean):
        raise ZeroMeanError(
            f"φ({_letter(marg.side)}) = 0: chi needs a nonzero first moment")
    return invert1(psi_series(marg))


def _letter(side):
    return "a" if side == LEFT else "b"


def H_series(d):
    """Bivariate moment generating series ``H(t, s) = sum m[p][q] t**p s**q``."""
    return Series2(d.m)


def s_transform_1d(source, side=LEFT):
    """``S(z) = (1 + z) chi(z) / z``, one order shorter than the moments."""
    chi = chi_series(source, side)
    unit = shift_divide(chi, 1)
    return unit * Series1([1, 1], order=unit.order)


class KTilde(NamedTuple):
    ktilde: Series1
    R: Series1
    invy: Series1


def _k_parts(marg):
    invy = shift_multiply(h_series(marg), 1)
    y = invert1(invy)
    ktilde = reciprocal(shift_divide(y, 1))
    return ktilde, invy, y


def k_tilde(source, side=LEFT):
    """``Ktilde = z K(z)`` as a unit series, with ``R`` and ``t h(t)``.

    ``invy(t) = t h(t)`` inverts ``y(z) = 1 / K(z)``; ``Ktilde = z / y`` and
    ``R = (Ktilde - 1) / z``, so ``R(0)`` is the mean.
    """
    ktilde, invy, _ = _k_parts(_as_marginal(source, side))
    R = shift_divide(ktilde - 1, 1)
    return KTilde(ktilde, R, invy)


def y_series(source, side=LEFT):
    """``y(z) = 1 / K(z)``, the compositional inverse of ``t h(t)``."""
    return _k_parts(_as_marginal(source, side))[2]


def moments_from_S(S, side=LEFT):
    """Recover the marginal whose S-transform is ``S``."""
    if is_zero(S[0]):
        raise NotAUnit("S(0) must be nonzero")
    chi = shift_multiply(S / Series1([1, 1], order=S.order), 1)
    psi = invert1(chi)
    return Marginal(side, (psi + 1).coeffs)


def moments_from_R(R, side=LEFT):
    """Recover the marginal whose R-transform is ``R``."""
    ktilde = shift_multiply(R, 1) + 1
    y = shift_multiply(reciprocal(ktilde), 1)
    invy = invert1(y)
    return Marginal(side, shift_divide(invy, 1).coeffs)
