import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stokesweber.errors import BadInputError, NotGeneratedError
from stokesweber.exact_series import (
    G_CEILING,
    FormalSeries,
    GammaPolynomial,
    _generate,
    dump_g_json,
    g_generating_series,
    g_polynomials,
    ghat_eval,
    ghat_polynomial,
    invert_phase_map,
    verify_phase_identity,
)

# c_0..c_12 of t(w), frozen from an order-by-order sympy solve of
# t - log t - 1 = w^2/2 (coefficient of w^(n+1) is linear in c_n).
T_COEFFS_12 = [
    F(1), F(1), F(1, 3), F(1, 36), F(-1, 270), F(1, 4320), F(1, 17010),
    F(-139, 5443200), F(1, 204120), F(-571, 2351462400), F(-281, 1515591000),
    F(163879, 2172751257600), F(-5221, 354648294000),
]

# printed Ghat_{2k} polynomials, lowest power first, with their common denominators
GHAT_PRINTED = {
    0: ([F(2, 3), -1], 1),
    1: ([46, -225, 270, -90], 15),
    2: ([230, -3969, 11340, -11760, 5040, -756], 70),
    3: ([-3626, -17781, 183330, -397530, 370440, -170100, 37800, -3240], 350),
    4: (
        [-4032746, 43924815, 88280280, -743046480, 1353607200, -1160830440,
         541870560, -141134400, 19245600, -1069200],
        231000,
    ),
}

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=50)


def poly_strategy():
    return st.lists(rationals, max_size=5).map(GammaPolynomial)


class TestPhaseMap:
    def test_order5_matches_printed_reversion(self):
        assert list(invert_phase_map(5).coeffs) == [1, 1, F(1, 3), F(1, 36), F(-1, 270), F(1, 4320)]

    def test_order1_is_branch_normalisation(self):
        assert list(invert_phase_map(1).coeffs) == [1, 1]

    def test_order12_against_frozen_oracle(self):
        assert list(invert_phase_map(12).coeffs) == T_COEFFS_12

    def test_bad_order(self):
        with pytest.raises(BadInputError):
            invert_phase_map(0)

    @pytest.mark.parametrize("order", range(1, 31))
    def test_identity_holds(self, order):
        assert verify_phase_identity(invert_phase_map(order))

    def test_perturbed_series_fails(self):
        c = list(invert_phase_map(10).coeffs)
        c[2] += 1
        assert not verify_phase_identity(FormalSeries(c))

    def test_printed_prefix_passes(self):
        assert verify_phase_identity(FormalSeries([1, 1, F(1, 3), F(1, 36)]))

    def test_rejects_non_unit_constant(self):
        with pytest.raises(BadInputError):
            verify_phase_identity(FormalSeries([F(2), F(1)]))

    def test_prefix_stability(self):
        assert invert_phase_map(20).coeffs[:11] == invert_phase_map(10).coeffs


class TestGPolynomials:
    def test_g0(self):
        assert g_polynomials(0)[0] == GammaPolynomial([F(2, 3), -1])

    def test_g2(self):
        assert g_polynomials(2)[2] * 36 == GammaPolynomial([46, -225, 270, -90]) / 15

    @pytest.mark.parametrize("k", sorted(GHAT_PRINTED))
    def test_printed_ghat(self, k):
        coeffs, den = GHAT_PRINTED[k]
        assert ghat_polynomial(k) == GammaPolynomial(coeffs) / den

    def test_ghat6_uses_corrected_constant(self):
        assert ghat_polynomial(3).coeffs[0] == F(-3626, 350)
        assert ghat_polynomial(3).coeffs[0] != F(-3226, 350)

    def test_degree_bound(self):
        for k, g in enumerate(g_polynomials(G_CEILING)):
            assert g.degree <= k + 1

    @pytest.mark.parametrize("max_index", [0, 3, 9])
    def test_pole_cancels(self, max_index):
        series = g_generating_series(max_index)
        assert series.lowest_power == -1
        assert series[-1] == GammaPolynomial([-1])

    def test_prefix_stable_under_higher_order(self):
        assert _generate(20)[:9] == _generate(8)

    def test_beyond_ceiling(self):
        with pytest.raises(NotGeneratedError):
            g_polynomials(G_CEILING + 1)
        with pytest.raises(NotGeneratedError):
            ghat_eval(G_CEILING // 2 + 1, 0)


class TestGhatEval:
    def test_k0(self):
        assert ghat_eval(0, F(1, 4)) == F(5, 12)

    def test_k3_constant(self):
        assert ghat_eval(3, 0) == F(-3626, 350)

    def test_k4_constant(self):
        assert ghat_eval(4, 0) == F(-4032746, 231000)


def test_dump_json_layout():
    rows = json.loads(dump_g_json(2))
    assert [r["index"] for r in rows] == [0, 1, 2]
    assert rows[0]["gamma_coeffs"] == ["2/3", "-1/1"]
    scaled = json.loads(dump_g_json(4, scaled=True))
    assert [r["index"] for r in scaled] == [0, 2, 4]
    assert scaled[1]["gamma_coeffs"][0] == "46/15"


class TestGammaPolynomial:
    def test_canonical_degree(self):
        assert GammaPolynomial([1, 2, 0, 0]).degree == 1
        assert GammaPolynomial([0]).degree == -1

    @given(poly_strategy(), poly_strategy(), rationals)
    def test_evaluation_is_a_ring_homomorphism(self, p, q, g):
        assert (p + q)(g) == p(g) + q(g)
        assert (p * q)(g) == p(g) * q(g)
        assert (p - q)(g) == p(g) - q(g)


class TestFormalSeries:
    @settings(max_examples=30)
    @given(st.lists(rationals, min_size=1, max_size=7))
    def test_log_exp_roundtrip(self, tail):
        s = FormalSeries([F(0)] + tail)
        assert s.exp().log() == s

    @settings(max_examples=30)
    @given(st.lists(rationals, min_size=1, max_size=7))
    def test_reciprocal(self, tail):
        s = FormalSeries([F(1)] + tail)
        prod = s * s.reciprocal()
        assert list(prod.coeffs) == [1] + [0] * len(tail)

    def test_laurent_reciprocal_shifts_power(self):
        s = FormalSeries([F(1), F(1, 2)], lowest_power=1)
        r = s.reciprocal()
        assert r.lowest_power == -1
        assert list(r.coeffs) == [1, F(-1, 2)]

    def test_compose_matches_substitution(self):
        # log(1 + v) with v = w gives the log1p coefficients back
        v = FormalSeries([F(0), F(1), F(0), F(0)])
        log1p = FormalSeries([F(0), F(1), F(-1, 2), F(1, 3)])
        assert log1p.compose(v) == log1p

    def test_gamma_coefficients_exp(self):
        # exp(gamma * w) = 1 + gamma w + gamma^2 w^2/2
        g = GammaPolynomial.gamma()
        s = FormalSeries([GammaPolynomial(), g, GammaPolynomial()]).exp()
        assert s[2] == g * g / 2
