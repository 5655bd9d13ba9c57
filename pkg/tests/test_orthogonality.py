"""Birkhoff-James orthogonality, its epsilon relaxation, and the LP oracle."""

from fractions import Fraction

import pytest

import coapprox as ca
from coapprox.linalg import dot, neg, scale

from conftest import nonzero_point, rational_point, seeded

F = Fraction


class TestEpsilonValue:
    def test_accepts_the_half_open_interval(self):
        assert ca.epsilon_value(0) == F(0)
        assert ca.epsilon_value("1/2") == F(1, 2)
        assert ca.epsilon_value(F(99, 100)) == F(99, 100)

    @pytest.mark.parametrize("bad", [F(1), F(5, 4), F(-1, 2)])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            ca.epsilon_value(bad)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            ca.epsilon_value(0.3)


class TestBjOrthogonal:
    def test_smooth_point_against_its_kernel(self):
        sp = ca.make_linf(2)
        assert ca.bj_orthogonal(sp, (1, F(1, 2)), (0, 1))

    def test_not_symmetric(self):
        sp = ca.make_linf(2)
        assert ca.bj_orthogonal(sp, (1, F(1, 2)), (0, 1))
        assert not ca.bj_orthogonal(sp, (0, 1), (1, F(1, 2)))

    def test_corner_straddles(self):
        # at (1,1) the support values of (1,-1) are +1 and -1
        assert ca.bj_orthogonal(ca.make_linf(2), (1, 1), (1, -1))

    def test_positive_value_fails(self):
        assert not ca.bj_orthogonal(ca.make_linf(2), (1, 0), (1, 1))

    def test_l1_fixtures(self):
        sp = ca.make_l1(2)
        assert ca.bj_orthogonal(sp, (1, 1), (1, -1))
        assert not ca.bj_orthogonal(sp, (1, 1), (1, 0))

    def test_flat_minimum_counts(self):
        # norm(x + t y) stays equal to norm(x) on a whole interval
        assert ca.bj_orthogonal(ca.make_linf(2), (1, 0), (0, 1))

    def test_zero_left_argument_rejected(self):
        with pytest.raises(ca.ZeroVector):
            ca.bj_orthogonal(ca.make_linf(2), (0, 0), (1, 0))

    def test_zero_right_argument_is_orthogonal(self):
        assert ca.bj_orthogonal(ca.make_linf(2), (1, 0), (0, 0))

    def test_homogeneity(self):
        rng = seeded(43)
        sp = ca.make_l1(3)
        for _ in range(25):
            x = nonzero_point(rng, 3)
            y = rational_point(rng, 3)
            base = ca.bj_orthogonal(sp, x, y)
            assert base == ca.bj_orthogonal(sp, scale(x, F(3)), y)
            assert base == ca.bj_orthogonal(sp, x, scale(y, F(5, 2)))
            assert base == ca.bj_orthogonal(sp, x, neg(y))


class TestLambdaOracle:
    def test_agrees_on_fixtures(self):
        sp = ca.make_linf(2)
        cases = [((1, F(1, 2)), (0, 1)), ((1, 0), (1, 1)), ((1, 1), (1, -1)), ((1, 0), (0, 1))]
        for x, y in cases:
            assert ca.bj_orthogonal_lambda_oracle(sp, x, y) == ca.bj_orthogonal(sp, x, y)

    def test_agrees_on_random_pairs(self, prism):
        rng = seeded(47)
        for sp in (ca.make_linf(3), ca.make_l1(3), prism):
            for _ in range(20):
                x = nonzero_point(rng, 3)
                y = rational_point(rng, 3)
                assert ca.bj_orthogonal_lambda_oracle(sp, x, y) == ca.bj_orthogonal(sp, x, y)

    def test_zero_rejected(self):
        with pytest.raises(ca.ZeroVector):
            ca.bj_orthogonal_lambda_oracle(ca.make_linf(2), (0, 0), (1, 0))


def lambda_sweep(sp, x, y, eps):
    """Definitional check: norm(x + t y) >= norm(x) - eps |t| norm(y) for all t.

    The left side plus the relaxation term is convex piecewise linear in t,
    so the minimum sits at t = 0 or where two linear pieces cross.
    """
    nx, ny = ca.norm(sp, x), ca.norm(sp, y)
    if ny == 0:
        return True
    duals = sp.dual_extreme
    candidates = {F(0)}
    for i, g in enumerate(duals):
        for gp in duals[i + 1 :]:
            dy = dot(g, y) - dot(gp, y)
            if dy != 0:
                candidates.add(F(dot(gp, x) - dot(g, x)) / dy)

    def value(t):
        return max(dot(g, x) + t * dot(g, y) for g in duals) + eps * abs(t) * ny

    return min(value(t) for t in candidates) >= nx


class TestEpsBjOrthogonal:
    def test_fixtures(self):
        sp = ca.make_linf(2)
        assert not ca.eps_bj_orthogonal(sp, (1, 0), (1, 1), F(1, 2))
        assert ca.eps_bj_orthogonal(sp, (1, 0), (F(1, 4), 1), F(1, 2))

    def test_epsilon_zero_is_plain_orthogonality(self):
        rng = seeded(53)
        sp = ca.make_l1(3)
        for _ in range(40):
            x = nonzero_point(rng, 3)
            y = rational_point(rng, 3)
            assert ca.eps_bj_orthogonal(sp, x, y, 0) == ca.bj_orthogonal(sp, x, y)

    def test_monotone_in_epsilon(self):
        rng = seeded(59)
        sp = ca.make_linf(3)
        for _ in range(40):
            x = nonzero_point(rng, 3)
            y = rational_point(rng, 3)
            if ca.eps_bj_orthogonal(sp, x, y, F(1, 4)):
                assert ca.eps_bj_orthogonal(sp, x, y, F(1, 2))

    def test_matches_lambda_sweep(self, prism):
        rng = seeded(61)
        for sp in (ca.make_linf(2), ca.make_l1(3), prism):
            for _ in range(30):
                x = nonzero_point(rng, sp.dim)
                y = rational_point(rng, sp.dim)
                eps = F(rng.randint(0, 3), 4)
                assert ca.eps_bj_orthogonal(sp, x, y, eps) == lambda_sweep(sp, x, y, eps)

    def test_rejects_epsilon_one(self):
        with pytest.raises(ValueError):
            ca.eps_bj_orthogonal(ca.make_linf(2), (1, 0), (0, 1), 1)
