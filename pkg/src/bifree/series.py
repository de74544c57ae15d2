"""Truncated formal power series in one and two variables.

Coefficients are plain Python numbers.  Exact work uses
:class:`fractions.Fraction` throughout (integers are promoted on
construction); float work uses ``float`` or ``complex``.  Both kinds can flow
through the same code because every operation only needs ``+ - * /``.

A :class:`Series1` of order ``N`` holds the coefficients of ``t**0 .. t**N``.
A :class:`Series2` of order ``N`` holds the rectangular block ``t**p s**q``
with ``0 <= p, q <= N``.  Coefficients beyond the order are unknown, not
zero, so binary operations return the smaller of the two operand orders.

    >>> f = Series1([1, -1], order=4)
    >>> reciprocal(f)
    Series1([1, 1, 1, 1, 1])
"""

from fractions import Fraction
import numbers

from .errors import (
    CompositionBase,
    KindMismatch,
    NotAUnit,
    NotDivisible,
    NotInvertible,
)

# |f(0)| at or below this is treated as zero in float mode
UNIT_TOL = 1e-12
# relative tolerance for vanishing coefficients in float mode
REL_TOL = 1e-9

_ZERO = Fraction(0)


def coerce(x):
    """Promote ``x`` to the scalar types used for coefficients."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, numbers.Real):
        return float(x)
    if isinstance(x, numbers.Complex):
        return complex(x)
    raise TypeError(f"not a scalar: {x!r}")


def is_exact_value(x):
    return isinstance(x, Fraction)


def is_zero(x, tol=UNIT_TOL):
    """Exact test for rationals, ``abs(x) <= tol`` otherwise."""
    if isinstance(x, Fraction):
        return x == 0
    return abs(x) <= tol


def _is_scalar(x):
    return isinstance(x, numbers.Number)


class Series1:
    """Univariate truncated power series ``sum_k c[k] t**k``, ``k <= order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs, order=None):
        c = [coerce(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        c = c[: order + 1]
        c.extend([_ZERO] * (order + 1 - len(c)))
        self._c = tuple(c)

    @classmethod
    def constant(cls, value, order):
        return cls([value], order=order)

    @classmethod
    def identity(cls, order):
        """The series ``t``."""
        return cls([0, 1], order=order)

    @property
    def order(self):
        return len(self._c) - 1

    @property
    def coeffs(self):
        return self._c

    @property
    def is_exact(self):
        return all(isinstance(x, Fraction) for x in self._c)

    def __getitem__(self, k):
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if not isinstance(other, Series1):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(("Series1", self._c))

    def __repr__(self):
        return f"Series1([{', '.join(str(x) for x in self._c)}])"

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return Series1(self._c, order=order)

    def _check(self, other):
        if isinstance(other, Series2):
            raise KindMismatch("cannot combine Series1 with Series2")

    def __add__(self, other):
        if _is_scalar(other):
            return Series1((self._c[0] + other,) + self._c[1:])
        if not isinstance(other, (Series1, Series2)):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        return Series1([self._c[k] + other._c[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return Series1([-x for x in self._c])

    def __sub__(self, other):
        if _is_scalar(other) or isinstance(other, (Series1, Series2)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return Series1([x * other for x in self._c])
        if not isinstance(other, (Series1, Series2)):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        a, b = self._c, other._c
        return Series1([sum((a[i] * b[k - i] for i in range(k + 1)), _ZERO)
                        for k in range(n + 1)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return Series1([x / other for x in self._c])
        if isinstance(other, (Series1, Series2)):
            self._check(other)
            return self * reciprocal(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Series1.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result


class Series2:
    """Bivariate truncated power series ``sum c[p][q] z**p w**q``, ``p, q <= order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs, order=None):
        rows = [[coerce(x) for x in row] for row in coeffs]
        if order is None:
            order = max([len(rows) - 1] + [len(r) - 1 for r in rows])
        if order < 0:
            raise ValueError("order must be non-negative")
        rows = rows[: order + 1]
        rows.extend([] for _ in range(order + 1 - len(rows)))
        self._c = tuple(
            tuple(r[: order + 1]) + (_ZERO,) * (order + 1 - len(r[: order + 1]))
            for r in rows
        )

    @classmethod
    def constant(cls, value, order):
        return cls([[value]], order=order)

    @classmethod
    def from_terms(cls, terms, order):
        """Build from a ``{(p, q): coeff}`` mapping; omitted terms are zero."""
        rows = [[0] * (order + 1) for _ in range(order + 1)]
        for (p, q), c in terms.items():
            if p <= order and q <= order:
                rows[p][q] = c
        return cls(rows, order=order)

    @classmethod
    def lift(cls, f, var):
        """Embed a :class:`Series1` as a series in ``z`` (``var="z"``) or ``w``."""
        if not isinstance(f, Series1):
            raise KindMismatch("lift expects a Series1")
        n = f.order
        if var == "z":
            return cls([[f[p]] for p in range(n + 1)], order=n)
        if var == "w":
            return cls([list(f.coeffs)], order=n)
        raise ValueError(f"unknown variable {var!r}")

    @property
    def order(self):
        return len(self._c) - 1

    @property
    def coeffs(self):
        return self._c

    @property
    def is_exact(self):
        return all(isinstance(x, Fraction) for row in self._c for x in row)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            p, q = idx
            return self._c[p][q]
        return self._c[idx]

    def __eq__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(("Series2", self._c))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._c)
        return f"Series2([{body}])"

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return Series2(self._c, order=order)

    def row(self, p):
        """Coefficients of ``z**p`` as a :class:`Series1` in ``w``."""
        return Series1(self._c[p])

    def column(self, q):
        """Coefficients of ``w**q`` as a :class:`Series1` in ``z``."""
        return Series1([r[q] for r in self._c])

    def max_abs(self):
        return max(abs(x) for r in self._c for x in r)

    def _check(self, other):
        if isinstance(other, Series1):
            raise KindMismatch("cannot combine Series2 with Series1")

    def __add__(self, other):
        if _is_scalar(other):
            rows = [list(r) for r in self._c]
            rows[0][0] = rows[0][0] + other
            return Series2(rows)
        if not isinstance(other, (Series1, Series2)):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        a, b = self._c, other._c
        return Series2([[a[p][q] + b[p][q] for q in range(n + 1)]
                        for p in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return Series2([[-x for x in r] for r in self._c])

    def __sub__(self, other):
        if _is_scalar(other) or isinstance(other, (Series1, Series2)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return Series2([[x * other for x in r] for r in self._c])
        if not isinstance(other, (Series1, Series2)):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        a, b = self._c, other._c
        out = [[_ZERO] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            for j in range(n + 1):
                aij = a[i][j]
                if aij == 0:
                    continue
                for p in range(i, n + 1):
                    brow = b[p - i]
                    orow = out[p]
                    for q in range(j, n + 1):
                        orow[q] += aij * brow[q - j]
        return Series2(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return Series2([[x / other for x in r] for r in self._c])
        if isinstance(other, (Series1, Series2)):
            self._check(other)
            return self * reciprocal(other)
        return NotImplemented


def reciprocal(f):
    """Multiplicative inverse of a unit series.

    Raises :class:`NotAUnit` when the constant term vanishes.
    """
    if isinstance(f, Series1):
        c0 = f[0]
        if is_zero(c0):
            raise NotAUnit("constant term is zero; series is not a unit")
        inv0 = 1 / c0
        g = [inv0]
        for n in range(1, f.order + 1):
            acc = sum((f[k] * g[n - k] for k in range(1, n + 1)), _ZERO)
            g.append(-acc * inv0)
        return Series1(g)
    if isinstance(f, Series2):
        c0 = f[0, 0]
        if is_zero(c0):
            raise NotAUnit("constant term is zero; series is not a unit")
        inv0 = 1 / c0
        n = f.order
        a = f.coeffs
        g = [[_ZERO] * (n + 1) for _ in range(n + 1)]
        for p in range(n + 1):
            for q in range(n + 1):
                if p == 0 and q == 0:
                    g[0][0] = inv0
                    continue
                acc = _ZERO
                for i in range(p + 1):
                    for j in range(q + 1):
                        if i or j:
                            acc += a[i][j] * g[p - i][q - j]
                g[p][q] = -acc * inv0
        return Series2(g)
    raise TypeError("reciprocal expects Series1 or Series2")


def compose1(f, g):
    """Coefficients of ``f(g(t))``; requires ``g(0) == 0``."""
    if not isinstance(f, Series1) or not isinstance(g, Series1):
        raise KindMismatch("compose1 expects two Series1")
    if not is_zero(g[0]):
        raise CompositionBase("inner series must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    result = Series1.constant(f[n], n)
    for k in range(n - 1, -1, -1):
        result = result * g + f[k]
    return result


def invert1(f):
    """Compositional inverse ``g`` with ``f(g(z)) = z`` and ``g(f(t)) = t``.

    Solved order by order: the unknown top coefficient of ``g`` enters
    ``[z**n] f(g)`` only through ``f[1] * g[n]``.
    """
    if not isinstance(f, Series1):
        raise KindMismatch("invert1 expects a Series1")
    if f.order < 1:
        raise NotInvertible("order must be at least 1")
    if not is_zero(f[0]):
        raise NotInvertible("f(0) must vanish")
    if is_zero(f[1]):
        raise NotInvertible("f'(0) must be nonzero")
    inv1 = 1 / f[1]
    g = [_ZERO, inv1]
    for n in range(2, f.order + 1):
        partial = Series1(g, order=n)
        c = compose1(f.truncate(n), partial)[n]
        g.append(-c * inv1)
    return Series1(g, order=f.order)


def _powers(u, n):
    pw = [Series1.constant(1, n)]
    for _ in range(n):
        pw.append(pw[-1] * u)
    return pw


def subst2(H, u, v):
    """``H(u(z), v(w))`` for univariate ``u``, ``v`` vanishing at zero.

    With ``U[p][a] = [z**a] u**p`` and ``V[q][b] = [w**b] v**q`` the result is
    the matrix product ``U^T H V``.
    """
    if not isinstance(H, Series2):
        raise KindMismatch("subst2 expects a Series2 as first argument")
    if not isinstance(u, Series1) or not isinstance(v, Series1):
        raise KindMismatch("subst2 expects Series1 substitutions")
    if not is_zero(u[0]) or not is_zero(v[0]):
        raise CompositionBase("substituted series must have zero constant term")
    n = min(H.order, u.order, v.order)
    U = _powers(u.truncate(n), n)
    V = _powers(v.truncate(n), n)
    h = H.coeffs
    # HV[p][b] = sum_q H[p][q] V[q][b]
    HV = [[sum((h[p][q] * V[q][b] for q in range(b + 1)), _ZERO)
           for b in range(n + 1)] for p in range(n + 1)]
    out = [[sum((U[p][a] * HV[p][b] for p in range(a + 1)), _ZERO)
            for b in range(n + 1)] for a in range(n + 1)]
    return Series2(out)


def _vanish_tol(f):
    if f.is_exact:
        return None
    scale = f.max_abs() if isinstance(f, Series2) else max(abs(x) for x in f)
    return REL_TOL * scale


def shift_divide(f, i, j=0):
    """Exact division by ``z**i w**j`` (or ``t**i`` for a :class:`Series1`).

    The result order drops by ``max(i, j)``: the top coefficients of the
    quotient would depend on unknown coefficients of ``f``.  Raises
    :class:`NotDivisible` naming the first boundary coefficient that does not
    vanish.  In float mode a boundary coefficient is accepted when it is below
    ``REL_TOL`` times the largest coefficient.
    """
    tol = _vanish_tol(f)

    def vanishes(x):
        return x == 0 if tol is None else abs(x) <= tol

    if isinstance(f, Series1):
        for k in range(min(i, f.order + 1)):
            if not vanishes(f[k]):
                raise NotDivisible(f"coefficient {k} does not vanish", (k,))
        n = f.order - i
        if n < 0:
            raise ValueError("shift exceeds series order")
        return Series1([f[k + i] for k in range(n + 1)])
    if isinstance(f, Series2):
        N = f.order
        for p in range(N + 1):
            for q in range(N + 1):
                if (p < i or q < j) and not vanishes(f[p, q]):
                    raise NotDivisible(
                        f"coefficient ({p}, {q}) does not vanish", (p, q))
        n = N - max(i, j)
        if n < 0:
            raise ValueError("shift exceeds series order")
        return Series2([[f[p + i, q + j] for q in range(n + 1)]
                        for p in range(n + 1)])
    raise TypeError("shift_divide expects Series1 or Series2")


def shift_multiply(f, i, j=0):
    """Multiply by ``z**i w**j`` (or ``t**i``).

    Multiplying by a monomial makes more coefficients known: the order grows
    by ``i`` in one variable and by ``min(i, j)`` in two.
    """
    if isinstance(f, Series1):
        return Series1([_ZERO] * i + list(f.coeffs))
    if isinstance(f, Series2):
        n = f.order + min(i, j)
        return Series2.from_terms(
            {(p + i, q + j): f[p, q]
             for p in range(f.order + 1) for q in range(f.order + 1)},
            order=n)
    raise TypeError("shift_multiply expects Series1 or Series2")
