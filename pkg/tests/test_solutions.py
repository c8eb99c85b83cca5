from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biquadsum.chain import constraint_residual, generate_chain
from biquadsum.solutions import (
    certificate,
    enumerate_solutions,
    scale_to_integers,
    xy_from_pair,
)

rationals = st.builds(Fraction, st.integers(-100, 100), st.integers(1, 100))


def quartic_route(R: int, S: int) -> tuple[int, int]:
    """Independent integer evaluation of the degree-4 formulas; used as
    the oracle for the frozen expected values below."""
    x = R**4 - 6 * R**2 * S**2 + S**4
    y = 4 * R * S * (R**2 - S**2)
    return x, y


class TestXYFromPair:
    def test_seed_pair(self):
        sol = xy_from_pair(Fraction(3, 2), Fraction(1))
        assert sol.x == Fraction(-119, 16)
        assert sol.y == Fraction(15, 2)
        assert sol.x + sol.y == Fraction(1, 16)

    def test_degenerate(self):
        sol = xy_from_pair(Fraction(0), Fraction(0))
        assert (sol.x, sol.y) == (1, 0)

    def test_third_pair_sum_is_square(self):
        sol = xy_from_pair(Fraction(-113, 84), Fraction(-13))
        assert sol.x + sol.y == Fraction(2372159, 7056) ** 2

    @given(rationals, rationals)
    def test_sum_of_squares_identity(self, t, u):
        sol = xy_from_pair(t, u)
        assert sol.x**2 + sol.y**2 == (t * t * u * u + 1) ** 4


class TestCertificate:
    def test_seed_pair(self):
        cert = certificate(Fraction(3, 2), Fraction(1))
        assert cert.A == Fraction(17, 4)
        assert cert.B == 3
        assert cert.sum_root == Fraction(1, 4)
        assert cert.quartic_root == Fraction(13, 4)

    def test_trivial_pair(self):
        cert = certificate(Fraction(1), Fraction(0))
        assert (cert.A, cert.B, cert.sum_root, cert.quartic_root) == (1, 0, 1, 1)

    def test_negative_sum_root(self):
        cert = certificate(Fraction(3, 2), Fraction(-13))
        assert cert.sum_root == Fraction(9, 4) - 338 == Fraction(-1343, 4)

    @given(rationals, rationals)
    def test_pell_shape_unconditional(self, t, u):
        cert = certificate(t, u)
        assert cert.A**2 - 2 * cert.B**2 == cert.sum_root**2

    @pytest.mark.parametrize("node", generate_chain(6))
    def test_sum_root_squares_to_xy_sum_on_curve(self, node):
        sol = xy_from_pair(node.t, node.u)
        cert = certificate(node.t, node.u)
        assert sol.x + sol.y == cert.sum_root**2


class TestScaleToIntegers:
    def test_seed_pair(self):
        sol = scale_to_integers(Fraction(3, 2), Fraction(1))
        assert (sol.X, sol.Y, sol.a, sol.b) == (-119, 120, 1, 13)
        assert (sol.R, sol.S) == (3, 2)
        assert (sol.X, sol.Y) == quartic_route(3, 2)
        assert 119**2 + 120**2 == 28561 == 13**4

    def test_second_pair(self):
        sol = scale_to_integers(Fraction(3, 2), Fraction(-13))
        assert (sol.X, sol.Y, sol.a, sol.b) == (2276953, -473304, 1343, 1525)
        assert (sol.R, sol.S) == (-39, 2)
        assert (sol.X, sol.Y) == quartic_route(-39, 2)
        assert sol.X + sol.Y == 1803649 == 1343**2

    def test_first_all_positive_pair(self):
        sol = scale_to_integers(Fraction(-113, 84), Fraction(-13))
        assert (sol.X, sol.Y) == (4565486027761, 1061652293520)
        assert (sol.a, sol.b) == (2372159, 2165017)
        assert (sol.R, sol.S) == (1469, 84)
        assert (sol.X, sol.Y) == quartic_route(1469, 84)

    def test_off_curve_rejected(self):
        with pytest.raises(ValueError, match="constraint violated"):
            scale_to_integers(Fraction(1), Fraction(1))

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError, match="degenerate parameter"):
            scale_to_integers(Fraction(0), Fraction(0))

    @pytest.mark.parametrize("node", generate_chain(8))
    def test_scaling_coherence(self, node):
        sol = scale_to_integers(node.t, node.u)
        frac = xy_from_pair(node.t, node.u)
        S4 = sol.S**4
        assert sol.X == S4 * frac.x
        assert sol.Y == S4 * frac.y

    @pytest.mark.parametrize("node", generate_chain(8))
    def test_certificates_reverify(self, node):
        sol = scale_to_integers(node.t, node.u)
        assert sol.X + sol.Y == sol.a**2
        assert sol.X**2 + sol.Y**2 == sol.b**4
        assert sol.b == sol.R**2 + sol.S**2


class TestEnumerateSolutions:
    def test_depth_two_positive_only(self):
        sols = enumerate_solutions(2, positive_only=True)
        assert len(sols) == 1
        assert (sols[0].X, sols[0].Y) == (4565486027761, 1061652293520)

    def test_depth_zero_positive_only(self):
        assert enumerate_solutions(0, positive_only=True) == []

    def test_depth_two_all(self):
        sols = enumerate_solutions(2, positive_only=False)
        assert len(sols) == 3
        assert {(s.X, s.Y) for s in sols} == {
            (-119, 120),
            (2276953, -473304),
            (4565486027761, 1061652293520),
        }

    def test_all_results_on_curve_certified(self):
        for sol in enumerate_solutions(6, positive_only=False):
            assert sol.X + sol.Y == sol.a**2
            assert sol.X**2 + sol.Y**2 == sol.b**4

    def test_no_duplicates(self):
        sols = enumerate_solutions(6, positive_only=False)
        keys = [frozenset((s.X, s.Y)) for s in sols]
        assert len(keys) == len(set(keys))
