"""Joint moments of bi-free pairs from the free product of pointed spaces.

Each two-band law ``mu_k`` is realized on the space ``X_k`` of polynomials
``x**p y**q`` (``p, q <= N``) with state vector ``1`` and functional
``phi_k(x**p y**q) = m_k[p][q]``; the left variable multiplies by ``x`` and
the right one by ``y``.  The reduced space ``ker phi_k`` has the basis

    e_k(p, q) = x**p y**q - m_k[p][q] * 1,      (p, q) != (0, 0).

The free product is spanned by the vacuum ``xi`` (the empty word ``()``) and
alternating words of letters ``(k, p, q)`` standing for
``e_{k1}(p1, q1) (x) e_{k2}(p2, q2) (x) ...`` with ``k_i != k_{i+1}``.  Left
operators of factor ``k`` act on the first letter, right operators on the
last.  Everything is linear algebra over the scalars of the input, so exact
inputs give exact moments with no truncation anywhere.

A state is a plain ``dict`` mapping words to coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction

from .distributions import TwoBand
from .errors import DegreeOverflow, PreconditionError

BBMULT = "bbmult"
BPMULT = "bpmult"
BBADD = "bbadd"
OPS = (BBMULT, BPMULT, BBADD)

# operator name -> monomial exponent shift
_SHIFT = {"a": (1, 0), "b": (0, 1)}

VACUUM = ()


@dataclass(frozen=True)
class PairModel:
    """Commuting multiplication-operator realization of one two-band law."""

    functional: TwoBand

    @property
    def order(self):
        return self.functional.order

    def phi(self, p, q):
        return self.functional[p, q]

    def _check(self, p, q):
        if p > self.order or q > self.order:
            raise DegreeOverflow(
                f"monomial x^{p} y^{q} exceeds model order {self.order}")

    def decompose(self, vec):
        """Split a polynomial ``{(p, q): c}`` as ``(phi(vec), vec - phi(vec) 1)``."""
        scalar = sum((c * self.phi(p, q) for (p, q), c in vec.items()),
                     Fraction(0))
        reduced = dict(vec)
        reduced[(0, 0)] = reduced.get((0, 0), 0) - scalar
        reduced = {k: v for k, v in reduced.items() if v != 0}
        return scalar, reduced

    def act(self, op, p, q):
        """Multiply ``e(p, q)`` (or ``1`` when ``p == q == 0``) by ``x`` or ``y``.

        Returns ``(scalar, [((p', q'), coeff), ...])``: the vacuum component
        and the expansion of the reduced component in the ``e`` basis.
        """
        dp, dq = _SHIFT[op]
        P, Q = p + dp, q + dq
        self._check(P, Q)
        if p == 0 and q == 0:
            return self.phi(P, Q), [((P, Q), 1)]
        # x e(p,q) = x^{P} y^{Q} - m[p][q] x^{dp} y^{dq}
        c = self.phi(p, q)
        scalar = self.phi(P, Q) - c * self.phi(dp, dq)
        return scalar, [((P, Q), 1), ((dp, dq), -c)]


def build_pair_model(d):
    return PairModel(d)


def _add(out, word, c):
    if c == 0:
        return
    v = out.get(word, 0) + c
    if v == 0:
        out.pop(word, None)
    else:
        out[word] = v


def apply_left(model, k, op, state):
    """Left action of factor ``k``'s operator ``op`` (``"a"`` or ``"b"``)."""
    out = {}
    for word, c in state.items():
        if word and word[0][0] == k:
            _, p, q = word[0]
            rest = word[1:]
        else:
            p = q = 0
            rest = word
        scalar, reduced = model.act(op, p, q)
        _add(out, rest, c * scalar)
        for (pp, qq), r in reduced:
            _add(out, ((k, pp, qq),) + rest, c * r)
    return out


def apply_right(model, k, op, state):
    """Right action of factor ``k``'s operator ``op`` on the last letter."""
    out = {}
    for word, c in state.items():
        if word and word[-1][0] == k:
            _, p, q = word[-1]
            rest = word[:-1]
        else:
            p = q = 0
            rest = word
        scalar, reduced = model.act(op, p, q)
        _add(out, rest, c * scalar)
        for (pp, qq), r in reduced:
            _add(out, rest + ((k, pp, qq),), c * r)
    return out


def _sum_states(*states):
    out = {}
    for s in states:
        for w, c in s.items():
            _add(out, w, c)
    return out


def vacuum_state():
    return {VACUUM: Fraction(1)}


def oracle_moments(op, mu, nu, P, Q):
    """Moments of the bi-free combination of ``mu`` and ``nu``.

    Entry ``(p, q)`` of the returned ``(P+1) x (Q+1)`` table is the vacuum
    coefficient of ``A**p B**q xi`` where, with ``a_k = lambda_k(x)`` and
    ``b_k = rho_k(y)``:

    * ``bbmult``: ``A = a_1 a_2``, ``B = b_1 b_2``;
    * ``bpmult``: ``A = a_1 + a_2``, ``B = b_1 b_2``;
    * ``bbadd``:  ``A = a_1 + a_2``, ``B = b_1 + b_2``.
    """
    if op not in OPS:
        raise ValueError(f"unknown oracle operation {op!r}")
    need = max(P, Q)
    for name, d in (("mu", mu), ("nu", nu)):
        if d.order < need:
            raise PreconditionError(
                f"{name} has order {d.order}, at least {need} required")
    models = {1: build_pair_model(mu), 2: build_pair_model(nu)}

    def left(s):
        if op == BBMULT:
            return apply_left(models[1], 1, "a", apply_left(models[2], 2, "a", s))
        return _sum_states(apply_left(models[1], 1, "a", s),
                           apply_left(models[2], 2, "a", s))

    def right(s):
        if op == BBADD:
            return _sum_states(apply_right(models[1], 1, "b", s),
                               apply_right(models[2], 2, "b", s))
        return apply_right(models[1], 1, "b", apply_right(models[2], 2, "b", s))

    zero = mu[0, 0] * 0
    table = [[zero] * (Q + 1) for _ in range(P + 1)]
    base = vacuum_state()
    for q in range(Q + 1):
        if q:
            base = right(base)
        s = base
        for p in range(P + 1):
            if p:
                s = left(s)
            table[p][q] = s.get(VACUUM, zero)
    return table


def oracle_twoband(op, mu, nu, order):
    """Square oracle table packaged as a :class:`TwoBand`."""
    return TwoBand(oracle_moments(op, mu, nu, order, order))
