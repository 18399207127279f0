"""Tests for the closed-form determinants and the reduction procedures."""

import pytest

from spiraldet.closed_forms import (
    qreduction_check,
    reduce_even,
    reduce_odd,
    thm1_even,
    thm1_odd,
    thm2_even,
    thm2_odd,
    thm3_even,
    thm3_odd,
    verify_reduction,
)
from spiraldet.determinant_engine import det_bareiss_rational, det_cofactor
from spiraldet.exponent_algebra import (
    LaurentPoly,
    bracket,
    evaluate,
    exponents,
)
from spiraldet.spiral_builder import (
    build_additive,
    build_bracket_xx,
    build_qpower,
    specialize_additive,
)

A, B, C, X, Y = (LaurentPoly.variable(v) for v in "abcxy")


def additive_polys(n):
    return [[form.to_poly() for form in row] for row in build_additive(n)]


class TestTheorem1:
    def test_even_boundary(self):
        assert thm1_even(0) == LaurentPoly.one()

    def test_odd_boundary(self):
        assert thm1_odd(0) == A

    def test_even_1_expansion(self):
        assert thm1_even(1) == A * X + B * X + X * X + A * Y + X * Y

    def test_even_1_against_oracle(self):
        assert thm1_even(1) == det_cofactor(additive_polys(2))

    def test_odd_1_against_oracle(self):
        assert thm1_odd(1) == det_cofactor(additive_polys(3))

    def test_even_1_at_inward_point(self):
        # the 2x2 inward spiral [[1, 2], [4, 3]] has determinant 3 - 8 = -5
        assert evaluate(thm1_even(1), (4, -1, -1, -1, -1)) == -5

    def test_odd_1_at_all_ones(self):
        value = det_bareiss_rational(specialize_additive(3, (1, 1, 1, 1, 1)))
        assert evaluate(thm1_odd(1), (1, 1, 1, 1, 1)) == value

    @pytest.mark.parametrize("n", range(1, 6))
    def test_formula_equals_oracle(self, n):
        formula = thm1_even(n // 2) if n % 2 == 0 else thm1_odd(n // 2)
        assert formula == det_cofactor(additive_polys(n))


class TestTheorem2:
    def test_odd_boundary(self):
        assert thm2_odd(0) == A

    def test_even_boundary(self):
        assert thm2_even(0) == LaurentPoly.one()

    def test_even_1_two_terms(self):
        expected = (LaurentPoly.monomial(exponents(a=2, b=1, x=2, y=1))
                    - LaurentPoly.monomial(exponents(a=2, b=1, x=1)))
        assert thm2_even(1) == expected
        assert thm2_even(1) == det_cofactor(build_qpower(2))

    def test_even_2_matches_integer_spiral_at_q2(self):
        # det of the 4x4 matrix of powers q^1..q^16 at q = 2, computed
        # independently from the displayed exponent layout
        assert evaluate(thm2_even(2), (2, 2, 2, 2, 2)) == -3243824381952

    @pytest.mark.parametrize("n", range(1, 6))
    def test_formula_equals_oracle(self, n):
        formula = thm2_even(n // 2) if n % 2 == 0 else thm2_odd(n // 2)
        assert formula == det_cofactor(build_qpower(n))

    def test_cubic_exponent_coefficients_are_integers(self):
        # construction asserts divisibility by 3; just exercise a range
        for n in range(0, 30):
            thm2_even(n % 8)
            thm2_odd(n % 8)


class TestTheorem3:
    def test_odd_boundary(self):
        assert thm3_odd(0) == bracket(exponents(a=1))

    def test_even_boundary(self):
        assert thm3_even(0) == LaurentPoly.one()

    def test_even_1_is_corner_product(self):
        # the 2x2 case is the corner factor alone: [a^2 b x^2][x]
        expected = bracket(exponents(a=2, b=1, x=2)) * bracket(exponents(x=1))
        assert thm3_even(1) == expected
        assert thm3_even(1) == det_cofactor(build_bracket_xx(2))

    def test_odd_1_against_oracle(self):
        assert thm3_odd(1) == det_cofactor(build_bracket_xx(3))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_formula_equals_oracle(self, n):
        formula = thm3_even(n // 2) if n % 2 == 0 else thm3_odd(n // 2)
        assert formula == det_cofactor(build_bracket_xx(n))

    @pytest.mark.parametrize("n", range(0, 5))
    def test_integer_exponent_closure(self, n):
        for formula in (thm3_even(n), thm3_odd(n)):
            assert not formula.has_half_exponents()


class TestReductions:
    def test_odd_1_data(self):
        data = reduce_odd(1)
        assert data.auxiliary["D1"] == B + 2 * C + 2 * X + 2 * Y
        assert data.up_increment == 2 * (B + C + X + Y)
        assert data.down_increment == -(B + C) - 2 * (X + Y)
        assert data.scalar_factor == C
        assert data.pivot == C

    def test_even_1_data(self):
        data = reduce_even(1)
        assert data.up_increment == -(X + Y)
        assert data.down_increment == B + C + X + Y
        assert data.auxiliary["D2"] == B + X + Y
        assert data.scalar_factor == -B

    def test_even_1_centre_is_polynomial_after_clearing(self):
        # -b * A_2 = D_2*E - a*b equals the closed form of the 2x2 determinant
        data = reduce_even(1)
        assert -1 * data.centre_numerator == thm1_even(1)

    def test_border_entries_match_matrix(self):
        for n in (1, 2, 3):
            data = reduce_odd(n)
            matrix = additive_polys(2 * n + 1)
            positions = {
                "E1": (n, 0), "E2": (2 * n - 1, 0), "E3": (2 * n - 1, 1),
                "E4": (2 * n - 1, 2 * n), "E5": (2 * n, 0), "E6": (2 * n, 1),
                "E7": (2 * n, 2 * n),
            }
            for name, (i, j) in positions.items():
                assert data.auxiliary[name] == matrix[i][j], name

    def test_odd_recurrence_20_points(self):
        assert verify_reduction("odd", 1, 20, seed=2718).failures == 0

    def test_even_recurrence_20_points(self):
        assert verify_reduction("even", 1, 20, seed=2718).failures == 0

    def test_scalar_factors(self):
        for n in (1, 2, 3):
            assert reduce_odd(n).scalar_factor == C
            assert reduce_even(n).scalar_factor == -B

    def test_bad_parity_rejected(self):
        with pytest.raises(ValueError):
            verify_reduction("sideways", 1, 1, 0)


class TestQReduction:
    @pytest.mark.parametrize("n", (2, 3, 4, 5, 6, 7))
    def test_single_row_operation_clears_boundary(self, n):
        assert qreduction_check(n).failures == 0

    def test_small_size_rejected(self):
        with pytest.raises(ValueError):
            qreduction_check(1)
