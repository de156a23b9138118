import math
import random
from decimal import Decimal
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stokesweber.coefficients import (
    KummerParams,
    TruncationSpec,
    WeberParams,
    a_coefficients,
    b_coefficients,
    optimal_truncation,
    pochhammer,
    theta,
)
from stokesweber.errors import BadInputError, TruncationError
from stokesweber.precision import PrecisionContext

TABLE1_A_QUARTER = ["1.0000000000", "0.0781250000", "0.0714111328", "0.1327800751",
                    "0.3760373220", "1.4348174067"]
TABLE1_B_QUARTER = ["0.4166666667", "0.1010127315", "0.1068229877", "0.2659511653",
                    "0.8932217131", "3.8427298888"]


def weber(a, kind="even"):
    return KummerParams.from_weber(kind, a)


def close_to_printed(value, printed):
    exp = Decimal(printed)
    got = Decimal(value.numerator) / Decimal(value.denominator)
    return abs(got - exp) <= Decimal(1).scaleb(exp.as_tuple().exponent)


class TestPochhammer:
    def test_empty(self):
        assert pochhammer(F(7, 3), 0) == 1

    def test_integer(self):
        assert pochhammer(3, 4) == 360

    @pytest.mark.parametrize("n", range(4))
    def test_negative_integer_base_terminates(self, n):
        for k in range(2 * n + 1, 2 * n + 5):
            assert pochhammer(-2 * n, k) == 0


class TestTheta:
    def test_values(self):
        assert theta(F(1, 2)) == 0
        assert theta(F(1, 4)) == F(-1, 8)

    @pytest.mark.parametrize("n", range(4))
    def test_integer_theta(self, n):
        assert theta(2 * n + F(1, 2)) == n


class TestOptimalTruncation:
    def test_quarter(self):
        assert optimal_truncation(F(1, 4), 6) == TruncationSpec(18, F(1, 4))

    def test_one(self):
        assert optimal_truncation(1, 6) == TruncationSpec(17, F(0))

    def test_five_quarters_recomputed_from_definition(self):
        # x^2/2 - a = 16.75 -> nearest integer 17
        t = optimal_truncation(F(5, 4), 6)
        assert t == TruncationSpec(17, F(1, 4))
        assert t.m0 - (F(36, 2) - F(5, 4)) == t.alpha

    def test_tie_goes_up(self):
        assert optimal_truncation(1, 3) == TruncationSpec(4, F(1, 2))

    def test_too_small(self):
        with pytest.raises(TruncationError):
            optimal_truncation(1, F(3, 2))

    def test_float_path(self):
        mp = PrecisionContext().mp()
        a, x = mp.mpf("0.3"), mp.mpf("6.1")
        t = optimal_truncation(a, x)
        assert abs(t.m0 - (x * x / 2 - a) - t.alpha) < mp.mpf(10) ** -50

    @given(
        st.fractions(min_value=-3, max_value=3, max_denominator=64),
        st.fractions(min_value=3, max_value=12, max_denominator=64),
    )
    def test_alpha_bounded(self, a, x):
        t = optimal_truncation(a, x)
        assert abs(t.alpha) <= F(1, 2)
        assert t.m0 + a - x * x / 2 == t.alpha


def test_param_types_validate():
    with pytest.raises(BadInputError):
        WeberParams(1, 0)
    with pytest.raises(BadInputError):
        WeberParams(1, 2, M=0)
    with pytest.raises(BadInputError):
        TruncationSpec(3, F(1))
    assert WeberParams(F(1, 2), 3).theta == 0


class TestKummerParams:
    def test_even_map(self):
        p = KummerParams.from_weber("even", 1, 6)
        assert (p.a_k, p.b_k, p.x_k) == (F(3, 4), F(1, 2), 18)
        assert p.theta_hat == theta(1)

    def test_odd_map(self):
        p = KummerParams.from_weber("odd", 1, 6)
        assert (p.a_k, p.b_k, p.x_k) == (F(5, 4), F(3, 2), 18)
        assert p.theta_hat == theta(1) - F(1, 2)


class TestACoefficients:
    def test_table1_quarter(self):
        A = a_coefficients(weber(F(1, 4)), 6)
        assert all(close_to_printed(v, s) for v, s in zip(A, TABLE1_A_QUARTER))

    def test_table1_five_quarters(self):
        assert close_to_printed(a_coefficients(weber(F(5, 4)), 2)[1], "-0.0468750000")

    def test_a0(self):
        assert a_coefficients(KummerParams(F(3, 7), F(-5, 3), 1), 1) == [1]

    def test_even_and_odd_agree(self):
        a = F(3, 11)
        assert a_coefficients(weber(a, "even"), 8) == a_coefficients(weber(a, "odd"), 8)

    def test_duplication_identity(self):
        rng = random.Random(1234)
        for _ in range(100):
            a = F(rng.randint(-500, 500), rng.randint(1, 100))
            A = a_coefficients(weber(a), 21)
            for j in range(21):
                assert A[j] == pochhammer(F(1, 2) - a, 2 * j) / (4**j * math.factorial(j))

    @pytest.mark.parametrize("n", range(4))
    def test_finitely_many_at_pole_values(self, n):
        A = a_coefficients(weber(2 * n + F(1, 2)), n + 8)
        assert all(v == 0 for v in A[n + 1:])
        assert A[n] != 0


class TestBCoefficients:
    def test_table1_quarter(self):
        B = b_coefficients(weber(F(1, 4)), TruncationSpec(18, F(1, 4)), 6)
        assert all(close_to_printed(v, s) for v, s in zip(B, TABLE1_B_QUARTER))

    def test_b1_hand_check(self):
        B = b_coefficients(weber(F(5, 4)), TruncationSpec(17, F(0)), 2)
        assert B[1] == F(-3, 64) * F(5, 3) - F(23, 270)
        assert close_to_printed(B[1], "-0.1633101852")

    @given(
        st.fractions(min_value=-4, max_value=4, max_denominator=40),
        st.fractions(min_value=F(-39, 40), max_value=F(39, 40), max_denominator=40),
    )
    def test_b0_exact(self, a, alpha):
        B = b_coefficients(weber(a), TruncationSpec(5, alpha), 1)
        assert B[0] == F(2, 3) - alpha

    def test_mp_mode_agrees_with_exact(self):
        a, alpha = F(2, 7), F(-3, 10)
        exact = b_coefficients(weber(a), TruncationSpec(9, alpha), 8)
        mpctx = PrecisionContext(40).mp()
        p_mp = KummerParams(mpctx.mpf(2) / 7 / 2 + mpctx.mpf(1) / 4, F(1, 2), 1)
        approx = b_coefficients(p_mp, TruncationSpec(9, mpctx.mpf(-3) / 10), 8, mpctx)
        for e, v in zip(exact, approx):
            assert abs(mpctx.mpf(e.numerator) / e.denominator - v) < mpctx.mpf(10) ** -40

    def test_count_validation(self):
        with pytest.raises(BadInputError):
            b_coefficients(weber(1), TruncationSpec(5, F(0)), 0)
