import random
from fractions import Fraction as Fr

import pytest

from bifree.convolutions import free_add_1d, free_mult_1d
from bifree.distributions import LEFT, RIGHT, TwoBand
from bifree.errors import DegreeOverflow, PreconditionError
from bifree.oracle import (
    BBADD,
    BBMULT,
    BPMULT,
    OPS,
    VACUUM,
    apply_left,
    apply_right,
    build_pair_model,
    oracle_moments,
    vacuum_state,
)

from oracles import random_atoms, random_state, rng

HALF = Fr(1, 2)
MU = TwoBand.from_atoms([(1, 1, HALF), (3, 2, HALF)], 4)
NU = TwoBand.from_atoms([(1, 1, HALF), (2, 1, HALF)], 4)


class TestPairModel:
    def test_reduced_basis_of_point_mass(self):
        model = build_pair_model(TwoBand.point_mass(1, 1, 3))
        scalar, reduced = model.decompose({(2, 1): Fr(1)})
        assert scalar == 1
        assert reduced == {(2, 1): 1, (0, 0): -1}

    def test_vacuum_expectation_of_left_powers(self):
        model = build_pair_model(MU)
        s = vacuum_state()
        for p in range(1, 5):
            s = apply_left(model, 1, "a", s)
            assert s.get(VACUUM, 0) == MU[p, 0]

    def test_single_pair_mixed_moments(self):
        model = build_pair_model(MU)
        for p in range(5):
            for q in range(5):
                s = vacuum_state()
                for _ in range(q):
                    s = apply_right(model, 1, "b", s)
                for _ in range(p):
                    s = apply_left(model, 1, "a", s)
                assert s.get(VACUUM, 0) == MU[p, q]

    def test_decompose_idempotent(self):
        model = build_pair_model(MU)
        r = random.Random(0)
        for _ in range(20):
            vec = {(r.randint(0, 4), r.randint(0, 4)): Fr(r.randint(-5, 5), 3)
                   for _ in range(4)}
            scalar, reduced = model.decompose(vec)
            again, reduced2 = model.decompose(reduced)
            assert again == 0
            assert reduced2 == reduced

    def test_first_left_application(self):
        model = build_pair_model(MU)
        s = apply_left(model, 1, "a", vacuum_state())
        assert s == {VACUUM: MU[1, 0], ((1, 1, 0),): 1}

    def test_degree_overflow(self):
        model = build_pair_model(TwoBand.point_mass(1, 1, 2))
        s = vacuum_state()
        s = apply_left(model, 1, "a", apply_left(model, 1, "a", s))
        with pytest.raises(DegreeOverflow):
            apply_left(model, 1, "a", s)


class TestCommutation:
    def test_left_and_right_of_different_factors_commute(self):
        models = {1: build_pair_model(MU), 2: build_pair_model(NU)}
        r = random.Random(42)
        for _ in range(25):
            s = random_state(r, models, 4)
            lhs = apply_left(models[1], 1, "a", apply_right(models[2], 2, "b", s))
            rhs = apply_right(models[2], 2, "b", apply_left(models[1], 1, "a", s))
            assert lhs == rhs


class TestOracleMoments:
    @pytest.mark.parametrize("op", OPS)
    def test_unit_entry(self, op):
        assert oracle_moments(op, MU, NU, 2, 2)[0][0] == 1

    def test_bbmult_first_moment_factorizes(self):
        assert oracle_moments(BBMULT, MU, NU, 1, 1)[1][0] == MU[1, 0] * NU[1, 0]

    def test_bbmult_mixed_entry(self):
        # hand expansion of a1 a2 b1 b2 acting on the vacuum
        assert oracle_moments(BBMULT, MU, NU, 1, 1)[1][1] == MU[1, 1] * NU[1, 1] == Fr(21, 4)

    def test_free_product_second_moment(self):
        # phi((a1 a2)^2) = m2 n1^2 + m1^2 n2 - m1^2 n1^2 for free a1, a2
        d = TwoBand.from_atoms([(1, 1, HALF), (3, 1, HALF)], 2)
        assert oracle_moments(BBMULT, d, d, 2, 0)[2][0] == 24

    def test_free_sum_of_bernoullis(self):
        d = TwoBand.from_atoms([(0, 1, HALF), (1, 1, HALF)], 3)
        col = [row[0] for row in oracle_moments(BPMULT, d, d, 3, 0)]
        assert col == [1, 1, Fr(3, 2), Fr(5, 2)]

    @pytest.mark.parametrize("op", OPS)
    def test_symmetry(self, op):
        assert oracle_moments(op, MU, NU, 3, 3) == oracle_moments(op, NU, MU, 3, 3)

    @pytest.mark.parametrize("op", OPS)
    def test_headroom_does_not_matter(self, op):
        a = oracle_moments(op, MU.truncate(3), NU.truncate(3), 3, 3)
        b = oracle_moments(op, MU, NU, 3, 3)
        assert a == b

    def test_undersized_input(self):
        with pytest.raises(PreconditionError):
            oracle_moments(BBMULT, MU, NU.truncate(2), 3, 3)

    def test_marginals_match_one_variable_convolutions(self):
        r = rng(21)
        mu = TwoBand.from_atoms(random_atoms(r, 3), 4)
        nu = TwoBand.from_atoms(random_atoms(r, 2), 4)
        bb = oracle_moments(BBMULT, mu, nu, 4, 4)
        bp = oracle_moments(BPMULT, mu, nu, 4, 4)
        ba = oracle_moments(BBADD, mu, nu, 4, 4)
        mult_left = free_mult_1d(mu.marginal(LEFT), nu.marginal(LEFT)).moments
        mult_right = free_mult_1d(mu.marginal(RIGHT), nu.marginal(RIGHT)).moments
        add_left = free_add_1d(mu.marginal(LEFT), nu.marginal(LEFT)).moments
        add_right = free_add_1d(mu.marginal(RIGHT), nu.marginal(RIGHT)).moments
        assert tuple(row[0] for row in bb) == mult_left
        assert tuple(bb[0]) == mult_right
        assert tuple(row[0] for row in bp) == add_left
        assert tuple(bp[0]) == mult_right
        assert tuple(row[0] for row in ba) == add_left
        assert tuple(ba[0]) == add_right

    def test_real_inputs_give_rational_outputs(self):
        table = oracle_moments(BPMULT, MU, NU, 3, 3)
        assert all(isinstance(x, Fr) for row in table for x in row)

    def test_float_inputs(self):
        exact = oracle_moments(BBMULT, MU, NU, 3, 3)
        approx = oracle_moments(BBMULT, MU.to_float(), NU.to_float(), 3, 3)
        for p in range(4):
            for q in range(4):
                assert approx[p][q] == pytest.approx(float(exact[p][q]), rel=1e-12)
