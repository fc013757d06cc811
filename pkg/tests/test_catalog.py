"""Entropy catalog: values, expansions, limits, and parameter validation."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gentropy.catalog import (
    BoltzmannGibbs,
    BorgesRoditi,
    Distribution,
    DistributionError,
    GenericEntropy,
    GroupEntropy,
    JointDistribution,
    Kaniadakis,
    SAlphaBetaQ,
    SDelta,
    SFourth,
    SQDelta,
    SThird,
    SpecError,
    Tsallis,
    UnsupportedRepresentation,
    elementary_functional,
)

FIX = Distribution([0.5, 0.3, 0.2])


class TestDistribution:
    def test_rejects_negative(self):
        with pytest.raises(DistributionError):
            Distribution([0.5, -0.1, 0.6])

    def test_rejects_bad_sum(self):
        with pytest.raises(DistributionError):
            Distribution([0.5, 0.4])

    def test_uniform(self):
        d = Distribution.uniform(4)
        assert d.W == 4
        assert np.allclose(d.p, 0.25)

    def test_append_zero(self):
        d = FIX.append_zero()
        assert d.W == 4
        assert d.p[-1] == 0.0

    def test_joint_product_marginals(self):
        j = JointDistribution.product(Distribution([0.7, 0.3]), FIX)
        assert np.allclose(j.marginal_a().p, [0.7, 0.3])
        assert np.allclose(j.marginal_b().p, FIX.p)
        assert j.flatten().W == 6


class TestElementaryFunctionals:
    def test_first_is_bg(self):
        assert elementary_functional(1, FIX) == pytest.approx(
            BoltzmannGibbs().evaluate(FIX), abs=1e-15
        )

    def test_zero_probability_convention(self):
        d = Distribution([1.0, 0.0])
        assert elementary_functional(2, d) == 0.0

    def test_index_validation(self):
        with pytest.raises(SpecError):
            elementary_functional(0, FIX)


class TestBoltzmannGibbs:
    def test_certain_event_is_zero(self):
        assert BoltzmannGibbs().evaluate(Distribution([1.0])) == 0.0

    def test_fair_coin(self):
        assert BoltzmannGibbs().evaluate(Distribution([0.5, 0.5])) == pytest.approx(
            math.log(2), abs=1e-12
        )

    def test_kb_scaling(self):
        assert BoltzmannGibbs(kB=2.0).evaluate(FIX) == pytest.approx(
            2 * BoltzmannGibbs().evaluate(FIX), rel=1e-15
        )

    def test_a_sequence(self):
        assert BoltzmannGibbs().a_sequence(4) == [1, 0, 0, 0]

    def test_log_pair(self):
        bg = BoltzmannGibbs()
        assert bg.log_inverse(bg.generalized_log(0.37)) == pytest.approx(0.37)


class TestTsallis:
    def test_q_one_rejected(self):
        with pytest.raises(SpecError):
            Tsallis(1)

    def test_closed_form(self):
        q = 0.5
        expected = (sum(p ** q for p in FIX.p) - 1) / (1 - q)
        assert Tsallis(q).evaluate(FIX) == pytest.approx(expected, rel=1e-14)

    def test_closed_form_q_above_one(self):
        q = 2.0
        expected = (sum(p ** q for p in FIX.p) - 1) / (1 - q)
        assert Tsallis(q).evaluate(FIX) == pytest.approx(expected, rel=1e-14)

    def test_expansion_printed_convention(self):
        # below q = 1 the expansion is in powers of (1-q), above in (q-1),
        # both with 1/(k+1)! weights
        s = Fraction(1, 2)
        assert Tsallis(Fraction(1, 2)).expansion_coefficients(3) == [
            Fraction(1),
            s / 2,
            s ** 2 / 6,
        ]
        assert Tsallis(2).expansion_coefficients(3) == [
            Fraction(1),
            Fraction(1, 2),
            Fraction(1, 6),
        ]

    def test_a_sequence_is_exponential(self):
        s = Fraction(-1)  # q = 2
        assert Tsallis(2).a_sequence(4) == [
            s ** k / math.factorial(k) for k in range(4)
        ]

    def test_truncated_expansion_consistency_q_below_one(self):
        # the elementary-functional expansion converges to the closed form
        ts = Tsallis(Fraction(1, 2))
        coeffs = ts.expansion_coefficients(30)
        total = sum(
            float(c) * elementary_functional(k + 1, FIX)
            for k, c in enumerate(coeffs)
        )
        assert total == pytest.approx(ts.evaluate(FIX), rel=1e-12)

    def test_q_log_pair(self):
        ts = Tsallis(0.7)
        for x in (0.2, 0.9, 2.5):
            assert ts.log_inverse(ts.generalized_log(x)) == pytest.approx(x, rel=1e-12)


class TestKaniadakis:
    def test_parameter_domain(self):
        with pytest.raises(SpecError):
            Kaniadakis(0)
        with pytest.raises(SpecError):
            Kaniadakis(1.5)
        Kaniadakis(1)  # boundary allowed

    def test_closed_form(self):
        k = 0.4
        expected = sum(p * (p ** -k - p ** k) / (2 * k) for p in FIX.p)
        assert Kaniadakis(k).evaluate(FIX) == pytest.approx(expected, rel=1e-14)

    def test_odd_terms_vanish(self):
        a = Kaniadakis(Fraction(1, 3)).a_sequence(6)
        assert a[1] == a[3] == a[5] == 0

    def test_small_kappa_near_bg(self):
        assert Kaniadakis(1e-7).evaluate(FIX) == pytest.approx(
            BoltzmannGibbs().evaluate(FIX), abs=1e-8
        )


class TestBorgesRoditi:
    def test_equal_parameters_rejected(self):
        with pytest.raises(SpecError):
            BorgesRoditi(1, 1)

    def test_closed_form(self):
        a, b = 0.5, -0.25
        expected = sum(p * (p ** -a - p ** -b) / (a - b) for p in FIX.p)
        assert BorgesRoditi(a, b).evaluate(FIX) == pytest.approx(expected, rel=1e-13)

    def test_expansion(self):
        a, b = Fraction(1, 2), Fraction(1, 3)
        coeffs = BorgesRoditi(a, b).expansion_coefficients(3)
        assert coeffs == [1, (a + b) / 2, (a * a + a * b + b * b) / 6]

    def test_log_inverse_round_trip(self):
        br = BorgesRoditi(0.5, 0.2)
        for x in (0.3, 0.8, 1.7):
            assert br.log_inverse(br.generalized_log(x)) == pytest.approx(x, rel=1e-10)


class TestGroupEntropy:
    def test_constraint_validation(self):
        with pytest.raises(SpecError):
            GroupEntropy(0.5, {1: 1, -1: -1})  # weighted sum is 2, not 1
        with pytest.raises(SpecError):
            GroupEntropy(0.5, {1: 1})
        with pytest.raises(SpecError):
            GroupEntropy(0, {1: 1, 0: -1})

    def test_siii_coefficients(self):
        s3 = SThird(Fraction(4, 5))
        assert s3.coeffs == {-2: 1, -1: -2, 1: 1}

    def test_siii_expansion(self):
        q = Fraction(4, 5)
        coeffs = SThird(q).expansion_coefficients(3)
        assert coeffs == [
            1,
            Fraction(3, 2) * (1 - q),
            Fraction(-5, 6) * (1 - q) ** 2,
        ]

    def test_siv_constraints_hold(self):
        s4 = SFourth(Fraction(9, 10))
        assert sum(s4.coeffs.values()) == 0
        assert sum(n * v for n, v in s4.coeffs.items()) == 1

    def test_sabq_expansion(self):
        al, be, q = Fraction(1, 8), Fraction(-1, 8), Fraction(9, 10)
        coeffs = SAlphaBetaQ(al, be, q).expansion_coefficients(3)
        assert coeffs == [
            1,
            Fraction(3, 2) * (al + be) * (1 - q),
            Fraction(1, 6) * (1 + 6 * al - 6 * be) * (1 - q) ** 2,
        ]

    def test_sabq_reduces_to_siv(self):
        # alpha = 1, beta = -1 gives exactly the fourth-order coefficients
        s = SAlphaBetaQ(1, -1, Fraction(9, 10))
        assert s.coeffs == SFourth(Fraction(9, 10)).coeffs

    @pytest.mark.parametrize("cls", [SThird, SFourth])
    def test_q_to_one_limit(self, cls):
        bg = BoltzmannGibbs().evaluate(FIX)
        for q in (1 + 1e-6, 1 - 1e-6):
            assert cls(q).evaluate(FIX) == pytest.approx(bg, abs=1e-4)

    def test_sabq_q_to_one_limit(self):
        bg = BoltzmannGibbs().evaluate(FIX)
        for q in (1 + 1e-6, 1 - 1e-6):
            assert SAlphaBetaQ(0.125, -0.125, q).evaluate(FIX) == pytest.approx(
                bg, abs=1e-4
            )


class TestSDelta:
    def test_delta_one_is_bg(self):
        assert SDelta(1).evaluate(FIX) == pytest.approx(
            BoltzmannGibbs().evaluate(FIX), rel=1e-14
        )

    def test_uniform_closed_form(self):
        assert SDelta(2).evaluate(Distribution.uniform(6)) == pytest.approx(
            math.log(6) ** 2, rel=1e-14
        )

    def test_domain_validation(self):
        sd = SDelta(3.0)
        with pytest.raises(SpecError):
            sd.validate_for(2)  # 3 > 1 + ln 2
        sd.validate_for(10)

    def test_positive_delta_required(self):
        with pytest.raises(SpecError):
            SDelta(0)

    def test_no_exponential(self):
        with pytest.raises(UnsupportedRepresentation):
            SDelta(2).G(1.0)


class TestSQDelta:
    def test_delta_one_is_tsallis(self):
        q = 0.6
        assert SQDelta(q, 1).evaluate(FIX) == pytest.approx(
            Tsallis(q).evaluate(FIX), rel=1e-14
        )

    def test_parameter_validation(self):
        with pytest.raises(SpecError):
            SQDelta(1, 2)
        with pytest.raises(SpecError):
            SQDelta(0.5, 0)

    def test_uniform_closed_form(self):
        q, d = 0.5, 2.0
        W = 5
        lnq = (W ** (1 - q) - 1) / (1 - q)
        assert SQDelta(q, d).evaluate(Distribution.uniform(W)) == pytest.approx(
            lnq ** d, rel=1e-13
        )


class TestGenericEntropy:
    def test_matches_bg_for_unit_sequence(self):
        g = GenericEntropy([1], order=8)
        assert g.evaluate(FIX) == pytest.approx(
            BoltzmannGibbs().evaluate(FIX), rel=1e-12
        )

    def test_normalized_flag(self):
        assert GenericEntropy([1, 2]).normalized
        assert not GenericEntropy([2, 1]).normalized

    def test_leading_zero_disables_group_law(self):
        g = GenericEntropy([0, 2])
        assert not g.has_group_law

    def test_truncation_indicator(self):
        g = GenericEntropy([1, 1], order=4)
        assert g.truncation_indicator(0.5) > 0

    def test_empty_rejected(self):
        with pytest.raises(SpecError):
            GenericEntropy([])


class TestScaleConstant:
    def test_rescales_a_sequence(self):
        base = Tsallis(Fraction(1, 2)).a_sequence(4)
        scaled = Tsallis(Fraction(1, 2), scale_c=Fraction(2)).a_sequence(4)
        assert scaled == [a * Fraction(2) ** k for k, a in enumerate(base)]

    def test_g_is_composed_with_scale(self):
        ts = Tsallis(0.5)
        ts2 = Tsallis(0.5, scale_c=2)
        assert ts2.G(0.7) == pytest.approx(ts.G(1.4), rel=1e-14)

    def test_f_inverts_scaled_g(self):
        ts2 = Tsallis(0.5, scale_c=2)
        assert ts2.F(ts2.G(0.9)) == pytest.approx(0.9, rel=1e-12)

    def test_invalid_scale(self):
        with pytest.raises(SpecError):
            BoltzmannGibbs(scale_c=0)

    def test_invalid_kb(self):
        with pytest.raises(SpecError):
            BoltzmannGibbs(kB=-1)


class TestPhiClosedForms:
    def test_tsallis_phi(self):
        ts = Tsallis(0.5)
        x, y = 0.4, 0.9
        assert ts.phi(x, y) == pytest.approx(x + y + 0.5 * x * y, rel=1e-13)

    def test_bg_phi_additive(self):
        bg = BoltzmannGibbs()
        assert bg.phi(1.1, 2.2) == pytest.approx(3.3, rel=1e-14)

    def test_kb_enters_phi(self):
        ts = Tsallis(0.5, kB=2.0)
        x, y = 0.4, 0.9
        # homogeneity: Phi_kB(x, y) = kB * Phi(x/kB, y/kB)
        assert ts.phi(x, y) == pytest.approx(
            2.0 * Tsallis(0.5).phi(x / 2, y / 2), rel=1e-13
        )


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.floats(0.01, 1.0), min_size=2, max_size=6),
    st.sampled_from([0.3, 0.5, 0.8, 1.3, 2.0]),
)
def test_tsallis_expansion_consistency_random(weights, q):
    """Closed form vs a long truncated expansion, for q < 1 where it converges."""
    if q >= 1:
        return
    p = np.array(weights) / sum(weights)
    dist = Distribution(p)
    ts = Tsallis(Fraction(q).limit_denominator(10))
    coeffs = ts.a_sequence(60)
    total = sum(
        float(a) / (k + 1) * elementary_functional(k + 1, dist)
        for k, a in enumerate(coeffs)
    )
    assert total == pytest.approx(ts.evaluate(dist), rel=1e-9, abs=1e-12)
