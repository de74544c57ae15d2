from fractions import Fraction as Fr

import mpmath
import pytest

from bifree.distributions import TwoBand
from bifree.errors import ZeroMeanError
from bifree.series import Series2
from bifree.transforms import (
    RTILDE,
    S,
    T,
    compute,
    partial_R_reduced,
    partial_S,
    partial_T,
)

from oracles import AtomicLaw, evaluate_series2, random_atoms, rng

HALF = Fr(1, 2)
MU_ATOMS = [(1, 1, HALF), (3, 2, HALF)]


@pytest.fixture
def mu():
    return TwoBand.from_atoms(MU_ATOMS, 6)


def ones(order):
    return Series2.constant(1, order)


def zeros(order):
    return Series2.constant(0, order)


class TestPartialS:
    def test_factorizing_is_one(self):
        d = TwoBand.factorizing([1, 2, 7, 3, 1, 9], [1, Fr(1, 2), 4, 2, 2, 5])
        assert partial_S(d).series == ones(4)

    def test_point_mass_is_one(self):
        assert partial_S(TwoBand.point_mass(Fr(3, 2), -2, 5)).series == ones(4)

    def test_constant_term(self, mu):
        res = partial_S(mu)
        assert res.kind == S
        assert res[0, 0] == Fr(7, 6)

    def test_constant_term_formula(self):
        r = rng(5)
        for _ in range(10):
            d = TwoBand.from_atoms(random_atoms(r, 3), 4)
            assert partial_S(d)[0, 0] == d[1, 1] / (d[1, 0] * d[0, 1])

    def test_zero_mean(self):
        d = TwoBand.from_atoms([(-1, 1, HALF), (1, 2, HALF)], 4)
        with pytest.raises(ZeroMeanError, match="φ\\(a\\) = 0"):
            partial_S(d)

    def test_order_drops_by_one(self, mu):
        assert partial_S(mu).order == mu.order - 1


class TestPartialT:
    def test_factorizing_is_one(self):
        d = TwoBand.factorizing([1, 0, 7, 3, 1, 9], [1, Fr(1, 2), 4, 2, 2, 5])
        assert partial_T(d).series == ones(4)

    def test_point_mass_is_one(self):
        assert partial_T(TwoBand.point_mass(0, 3, 5)).series == ones(4)

    def test_z0_row_is_one(self, mu):
        res = partial_T(mu)
        assert res.kind == T
        assert res.series.row(0) == ones(5).row(0)

    def test_zero_left_mean_allowed(self):
        d = TwoBand.from_atoms([(-1, 1, HALF), (1, 2, HALF)], 5)
        assert partial_T(d).series.row(0) == ones(4).row(0)

    def test_zero_right_mean(self):
        d = TwoBand.from_atoms([(1, -1, HALF), (2, 1, HALF)], 4)
        with pytest.raises(ZeroMeanError, match="φ\\(b\\) = 0"):
            partial_T(d)


class TestReducedR:
    def test_factorizing_is_zero(self):
        d = TwoBand.factorizing([1, -1, 7, 3, 1, 9], [1, 0, 4, 2, 2, 5])
        assert partial_R_reduced(d).series == zeros(5)

    def test_point_mass_is_zero(self):
        assert partial_R_reduced(TwoBand.point_mass(2, 0, 4)).series == zeros(4)

    def test_zw_coefficient(self, mu):
        res = partial_R_reduced(mu)
        assert res.kind == RTILDE
        assert res[1, 1] == mu[1, 1] - mu[1, 0] * mu[0, 1] == HALF

    def test_boundary_rows_vanish(self):
        r = rng(9)
        for _ in range(5):
            d = TwoBand.from_atoms(random_atoms(r, 3, positive=False), 4)
            res = partial_R_reduced(d).series
            assert res.row(0) == zeros(4).row(0)
            assert res.column(0) == zeros(4).column(0)


class TestAgainstDefinitions:
    """Compare truncated series with the defining formulas at small points.

    Each formula is evaluated with its poles at ``z = 0`` / ``w = 0`` in
    place, from closed-form resolvents of atomic laws; only the series
    truncation (``O(eps**order)``) separates the two sides.
    """

    POINTS = [(Fr(1, 10**4), Fr(2, 10**4)), (Fr(-3, 10**4), Fr(1, 10**4))]

    @pytest.mark.parametrize("seed", range(4))
    @pytest.mark.parametrize("kind", ["s", "t", "rtilde"])
    def test_matches(self, seed, kind):
        atoms = random_atoms(rng(100 + seed), 3)
        law = AtomicLaw(atoms)
        series = compute(kind, TwoBand.from_atoms(atoms, 8)).series
        fn = {"s": law.S, "t": law.T, "rtilde": law.Rtilde}[kind]
        for zz, ww in self.POINTS:
            zz, ww = mpmath.mpf(zz.numerator) / zz.denominator, mpmath.mpf(ww.numerator) / ww.denominator
            exact = fn(zz, ww)
            approx = evaluate_series2(series, zz, ww)
            assert abs(exact - approx) <= mpmath.mpf("1e-20") * (1 + abs(exact))


class TestFloatMode:
    def test_matches_exact(self):
        d = TwoBand.from_atoms(random_atoms(rng(1), 3), 5)
        for fn in (partial_S, partial_T, partial_R_reduced):
            exact = fn(d).series
            approx = fn(d.to_float()).series
            scale = max(abs(float(x)) for r in exact.coeffs for x in r)
            for p in range(exact.order + 1):
                for q in range(exact.order + 1):
                    assert approx[p, q] == pytest.approx(float(exact[p, q]), abs=1e-9 * scale)

    def test_factorizing_float(self):
        d = TwoBand.factorizing([1, 0.5, 2.0, 1.5, 3.0], [1, 1.25, 2.0, 3.5, 6.0])
        s = partial_S(d).series
        assert s[0, 0] == pytest.approx(1.0)
        assert max(abs(s[p, q]) for p in range(4) for q in range(4) if p or q) < 1e-9


def test_compute_dispatch(mu):
    assert compute("S", mu).kind == S
    with pytest.raises(ValueError):
        compute("x", mu)
