"""Formal group laws: construction, axioms, inverses, and the Abel family."""

from fractions import Fraction

import pytest

from gentropy.groups import (
    GroupLawError,
    MultiPoly,
    abel_coefficients,
    abel_exponential,
    check_axioms,
    formal_inverse,
    group_law_from_exponential,
    law_from_table,
    lie_bracket,
)
from gentropy.series import TruncatedSeries, from_a_sequence


def exp_from_a(a, order):
    return from_a_sequence([Fraction(x) for x in a], order)


class TestMultiPoly:
    def test_truncation_on_construction(self):
        p = MultiPoly({(3, 3): Fraction(1), (1, 0): Fraction(2)}, 2, 4)
        assert p.terms == {(1, 0): Fraction(2)}

    def test_mul_respects_total_degree(self):
        x = MultiPoly.variable(0, 2, 2)
        y = MultiPoly.variable(1, 2, 2)
        prod = (x + y) * (x + y)
        assert prod.coefficient((1, 1)) == 2
        cube = prod * (x + y)
        assert cube.terms == {}

    def test_swap(self):
        p = MultiPoly({(2, 1): Fraction(5)}, 2, 4)
        assert p.swap(0, 1).terms == {(1, 2): Fraction(5)}

    def test_substitute_pair_requires_zero_constant(self):
        phi = law_from_table({}, 4)
        bad = MultiPoly.constant(1, 2, 4)
        with pytest.raises(Exception):
            phi.substitute_pair(bad, bad)


class TestConstruction:
    def test_additive_law(self):
        g = exp_from_a([1], 6)  # G = t
        law = group_law_from_exponential(g)
        assert law.c_table() == {}

    def test_multiplicative_law(self):
        # G = e^t - 1 gives Phi = x + y + xy
        a = [Fraction(1, 1)]
        for k in range(1, 8):
            a.append(a[-1] / k)
        law = group_law_from_exponential(exp_from_a(a, 8))
        assert law.c_table() == {(1, 1): Fraction(1)}

    def test_rejects_unnormalized(self):
        with pytest.raises(GroupLawError):
            group_law_from_exponential(TruncatedSeries([0, 2, 1], 4))

    def test_order_cannot_exceed_series(self):
        g = exp_from_a([1, 1], 4)
        with pytest.raises(GroupLawError):
            group_law_from_exponential(g, 6)


class TestLazardRelations:
    @pytest.mark.parametrize(
        "b1,b2",
        [
            (Fraction(1), Fraction(1)),
            (Fraction(2), Fraction(-1)),
            (Fraction(1, 2), Fraction(1, 3)),
        ],
    )
    def test_low_order_coefficients(self, b1, b2):
        # F = t + b1 t^2/2 + b2 t^3/3; the a_k of G = revert(F) obey
        # a_0 = 1, a_1 = -b1, a_2 = (3/2) b1^2 - b2
        order = 6
        f = TruncatedSeries([0, 1, b1 / 2, b2 / 3], order)
        g = f.revert()
        a = [(k + 1) * g.coeffs[k + 1] for k in range(3)]
        assert a[0] == 1
        assert a[1] == -b1
        assert a[2] == Fraction(3, 2) * b1 ** 2 - b2


class TestAxioms:
    def test_constructed_law_passes(self):
        g = exp_from_a([1, Fraction(-1, 2), Fraction(1, 3), Fraction(1, 5)], 8)
        law = group_law_from_exponential(g)
        chk = check_axioms(law.phi, 8)
        assert chk.all_pass
        assert chk.first_violation is None

    def test_asymmetric_table_fails(self):
        phi = law_from_table({(2, 1): Fraction(1)}, 4)
        chk = check_axioms(phi)
        assert not chk.symmetric
        assert chk.first_violation[0] == "symmetry"

    def test_null_composability_violation(self):
        phi = law_from_table({(2, 0): Fraction(1), (0, 2): Fraction(1)}, 4)
        chk = check_axioms(phi)
        assert chk.symmetric
        assert not chk.null_composable

    def test_non_associative_table_fails(self):
        # x + y + x^2 y^2 is symmetric and null-composable but not associative
        phi = law_from_table({(2, 2): Fraction(1)}, 6)
        chk = check_axioms(phi, 6)
        assert chk.symmetric and chk.null_composable
        assert not chk.associative
        assert chk.first_violation[0] == "associativity"


class TestFormalInverse:
    def test_additive(self):
        law = group_law_from_exponential(exp_from_a([1], 6))
        inv = formal_inverse(law)
        assert inv.coeffs == (0, -1, 0, 0, 0, 0, 0)

    def test_multiplicative_geometric_signs(self):
        a = [Fraction(1)]
        for k in range(1, 7):
            a.append(a[-1] / k)
        law = group_law_from_exponential(exp_from_a(a, 7))
        inv = formal_inverse(law)
        # Phi(x, phi(x)) = 0 for Phi = x + y + xy means phi = -x/(1+x)
        expected = [Fraction(0)] + [Fraction((-1) ** k) for k in range(1, 8)]
        assert inv.coeffs == tuple(expected)

    def test_substituting_back_gives_zero(self):
        g = exp_from_a([1, Fraction(1, 2), Fraction(-2, 5)], 7)
        law = group_law_from_exponential(g)
        inv = formal_inverse(law)
        x = MultiPoly.variable(0, 1, 7)
        cand = MultiPoly(
            {(k,): Fraction(inv.coeffs[k]) for k in range(1, 8)}, 1, 7
        )
        assert law.phi.substitute_pair(x, cand).terms == {}


class TestLieBracket:
    def test_commutative_laws_have_zero_bracket(self):
        g = exp_from_a([1, Fraction(2, 3), Fraction(-1, 4)], 6)
        law = group_law_from_exponential(g)
        assert lie_bracket(law.phi).terms == {}

    def test_asymmetric_table_has_nonzero_bracket(self):
        phi = law_from_table({(2, 0): Fraction(1)}, 4)
        br = lie_bracket(phi)
        assert br.coefficient((2, 0)) == 1
        assert br.coefficient((0, 2)) == -1


class TestAbelFamily:
    def test_closed_form_values(self):
        # frozen values for a=2, b=1
        beta = abel_coefficients(2, 1, 4)
        assert beta == [Fraction(3), Fraction(-1), Fraction(2), Fraction(-5)]

    def test_equal_parameters_rejected(self):
        with pytest.raises(GroupLawError):
            abel_coefficients(1, 1, 3)
        with pytest.raises(GroupLawError):
            abel_exponential(1, 1, 3)

    @pytest.mark.parametrize(
        "a,b",
        [
            (Fraction(2), Fraction(1)),
            (Fraction(1, 2), Fraction(1, 3)),
            (Fraction(3), Fraction(-1)),
        ],
    )
    def test_cross_check_against_constructed_law(self, a, b):
        # the closed-form beta_n equal the c_{1,n} = c_{n,1} coefficients of
        # the law built from the exponential, with all other mixed terms zero
        order = 6
        g = abel_exponential(a, b, order)
        law = group_law_from_exponential(g)
        beta = abel_coefficients(a, b, order - 1)
        table = law.c_table()
        for n in range(1, order):
            assert table.get((1, n), Fraction(0)) == beta[n - 1]
            assert table.get((n, 1), Fraction(0)) == beta[n - 1]
        for (k, m), coeff in table.items():
            if k >= 2 and m >= 2:
                assert coeff == 0

    def test_exponential_matches_direct_expansion(self):
        # (e^{at} - e^{bt})/(a - b) term by term
        import math

        a, b = Fraction(1, 2), Fraction(1, 3)
        g = abel_exponential(a, b, 5)
        for m in range(1, 6):
            expected = (a ** m - b ** m) / ((a - b) * math.factorial(m))
            assert g.coeffs[m] == expected
