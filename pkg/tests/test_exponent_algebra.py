"""Tests for the exact Laurent-polynomial core."""

import json
import random
from fractions import Fraction

import pytest

from spiraldet.exponent_algebra import (
    LaurentPoly,
    ZeroCoordinateError,
    angle,
    bracket,
    evaluate,
    exponents,
    from_records,
    from_string,
    to_records,
    to_string,
)


def random_poly(rng, max_terms=8, max_doubled=6, max_coeff=100):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        vec = tuple(rng.randint(-max_doubled, max_doubled) for _ in range(5))
        coeff = rng.randint(-max_coeff, max_coeff)
        if coeff:
            terms[vec] = terms.get(vec, 0) + coeff
    return LaurentPoly(terms)


def random_integer_poly(rng, max_terms=8, max_exp=3, max_coeff=100):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        vec = tuple(2 * rng.randint(-max_exp, max_exp) for _ in range(5))
        coeff = rng.randint(-max_coeff, max_coeff)
        if coeff:
            terms[vec] = terms.get(vec, 0) + coeff
    return LaurentPoly(terms)


def random_monomial(rng, max_doubled=6):
    return tuple(rng.randint(-max_doubled, max_doubled) for _ in range(5))


def random_point(rng):
    def coord():
        v = rng.randint(-20, 19)
        return v if v < 0 else v + 1
    return tuple(coord() for _ in range(5))


A = LaurentPoly.variable("a")
X = LaurentPoly.variable("x")


class TestAdd:
    def test_additive_inverse(self):
        assert A + (-A) == LaurentPoly.zero()
        assert not (A + (-A)).terms

    def test_like_term_merge(self):
        ax = LaurentPoly.monomial(exponents(a=1, x=1))
        assert ax + ax == LaurentPoly.monomial(exponents(a=1, x=1), 2)

    def test_bracket_of_inverse_cancels(self):
        # [a] + [1/a]: expanding both brackets cancels termwise
        assert bracket(exponents(a=1)) + bracket(exponents(a=-1)) == LaurentPoly.zero()


class TestMul:
    def test_inverse_monomials(self):
        assert X * LaurentPoly.monomial(exponents(x=-1)) == LaurentPoly.one()

    def test_bracket_product_expansion(self):
        # [a][x] = ax + 1/(ax) - a/x - x/a
        expected = (LaurentPoly.monomial(exponents(a=1, x=1))
                    + LaurentPoly.monomial(exponents(a=-1, x=-1))
                    - LaurentPoly.monomial(exponents(a=1, x=-1))
                    - LaurentPoly.monomial(exponents(a=-1, x=1)))
        assert bracket(exponents(a=1)) * bracket(exponents(x=1)) == expected
        # equivalently <ax> - <a/x>
        assert expected == angle(exponents(a=1, x=1)) - angle(exponents(a=1, x=-1))

    def test_half_exponents_sum_to_integers(self):
        half = LaurentPoly.monomial(exponents(b=Fraction(1, 2), c=Fraction(1, 2), x=2))
        assert half * half == LaurentPoly.monomial(exponents(b=1, c=1, x=4))


class TestBracketAngle:
    def test_bracket_of_one_is_zero(self):
        assert bracket(exponents()) == LaurentPoly.zero()

    def test_bracket_matrix_entry(self):
        expected = (LaurentPoly.monomial(exponents(a=1, b=1, x=1, y=1))
                    - LaurentPoly.monomial(exponents(a=-1, b=-1, x=-1, y=-1)))
        assert bracket(exponents(a=1, b=1, x=1, y=1)) == expected

    def test_bracket_x(self):
        assert bracket(exponents(x=1)) == X - LaurentPoly.monomial(exponents(x=-1))

    def test_angle_of_one_is_two(self):
        assert angle(exponents()) == LaurentPoly.constant(2)

    def test_angle_x(self):
        assert angle(exponents(x=1)) == X + LaurentPoly.monomial(exponents(x=-1))

    def test_key_identity_single(self):
        # <x>[Ax] - [Ax^2] - [A] = 0 for the monomial A = a*b^2
        a_vec = exponents(a=1, b=2)
        lhs = (angle(exponents(x=1)) * bracket(exponents(a=1, b=2, x=1))
               - bracket(exponents(a=1, b=2, x=2)) - bracket(a_vec))
        assert lhs == LaurentPoly.zero()


class TestEvaluate:
    def test_bracket_x_at_two(self):
        assert evaluate(bracket(exponents(x=1)), (1, 1, 1, 2, 1)) == Fraction(3, 2)

    def test_key_identity_instance(self):
        # [A x^2] - <x>[Ax] + [A] at A = a = 2, x = 2:
        # (8 - 1/8) - (5/2)(4 - 1/4) + (2 - 1/2) = 0
        p = (bracket(exponents(a=1, x=2))
             - angle(exponents(x=1)) * bracket(exponents(a=1, x=1))
             + bracket(exponents(a=1)))
        assert evaluate(p, (2, 1, 1, 2, 1)) == 0

    def test_zero_poly(self):
        assert evaluate(LaurentPoly.zero(), (3, -2, 5, 7, 1)) == 0

    def test_zero_coordinate_rejected(self):
        with pytest.raises(ZeroCoordinateError):
            evaluate(X, (1, 1, 1, 0, 1))

    def test_half_exponent_coordinates_are_square_roots(self):
        # [(bc)^(1/2) x^2] at sqrt(b)=3, sqrt(c)=2, x=5: 6*25 - 1/150
        p = bracket(exponents(b=Fraction(1, 2), c=Fraction(1, 2), x=2))
        value = evaluate(p, (1, 3, 2, 5, 1))
        assert value == Fraction(150) - Fraction(1, 150)


class TestRingAxioms:
    def test_ring_axioms_500_cases(self):
        rng = random.Random(2024)
        for _ in range(500):
            p, q, r = (random_poly(rng) for _ in range(3))
            assert (p + q) + r == p + (q + r)
            assert p * q == q * p
            assert p * (q + r) == p * q + p * r

    def test_canonical_no_zero_coefficients(self):
        rng = random.Random(99)
        for _ in range(200):
            p, q = random_poly(rng), random_poly(rng)
            for result in (p + q, p - q, p * q):
                assert all(result.terms.values())

    def test_equality_is_term_map_identity(self):
        p = bracket(exponents(a=1)) * angle(exponents(a=1))
        q = bracket(exponents(a=2))  # [a]<a> = [a^2]
        assert p == q and p.terms == q.terms


class TestBracketIdentities:
    def test_identity_5_3(self):
        # [a]<x> = [ax] + [a/x] for random monomial pairs
        rng = random.Random(53)
        for _ in range(200):
            a_vec = random_monomial(rng)
            x_vec = random_monomial(rng)
            lhs = bracket(a_vec) * angle(x_vec)
            rhs = (bracket(tuple(p + q for p, q in zip(a_vec, x_vec)))
                   + bracket(tuple(p - q for p, q in zip(a_vec, x_vec))))
            assert lhs == rhs

    def test_identity_5_4(self):
        # [a][x] = <ax> - <a/x>
        rng = random.Random(54)
        for _ in range(200):
            a_vec = random_monomial(rng)
            x_vec = random_monomial(rng)
            lhs = bracket(a_vec) * bracket(x_vec)
            rhs = (angle(tuple(p + q for p, q in zip(a_vec, x_vec)))
                   - angle(tuple(p - q for p, q in zip(a_vec, x_vec))))
            assert lhs == rhs

    def test_key_identity_5_5_grid(self):
        # [Ax^2] - <x>[Ax] + [A] = 0 on a 200 x 50 grid of random monomials
        rng = random.Random(55)
        a_vecs = [random_monomial(rng) for _ in range(200)]
        x_vecs = [random_monomial(rng) for _ in range(50)]
        for a_vec in a_vecs:
            for x_vec in x_vecs:
                ax = tuple(p + q for p, q in zip(a_vec, x_vec))
                ax2 = tuple(p + 2 * q for p, q in zip(a_vec, x_vec))
                combo = bracket(ax2) - angle(x_vec) * bracket(ax) + bracket(a_vec)
                assert combo == LaurentPoly.zero()


class TestEvaluationHomomorphism:
    def test_homomorphism_on_integer_exponents(self):
        # On integer-exponent polynomials the per-variable square-root reading
        # never kicks in, so evaluation is a plain ring homomorphism.
        rng = random.Random(77)
        for _ in range(200):
            p, q = random_integer_poly(rng), random_integer_poly(rng)
            pt = random_point(rng)
            assert evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt)
            assert evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt)


class TestSerialization:
    def test_records_round_trip(self):
        rng = random.Random(11)
        for _ in range(100):
            p = random_poly(rng)
            encoded = json.dumps(to_records(p))
            assert from_records(json.loads(encoded)) == p

    def test_string_round_trip(self):
        rng = random.Random(12)
        for _ in range(100):
            p = random_poly(rng)
            assert from_string(to_string(p)) == p

    def test_readable_string_form(self):
        p = LaurentPoly.monomial(exponents(a=1, b=2, c=Fraction(1, 2), x=-3))
        assert to_string(p) == "a*b^2*c^(1/2)*x^-3"
        assert to_string(LaurentPoly.zero()) == "0"

    def test_terms_serialized_in_lexicographic_order(self):
        p = bracket(exponents(a=1, x=1))
        recs = to_records(p)
        vecs = [tuple(int(2 * Fraction(e)) for e in r["exponents"]) for r in recs]
        assert vecs == sorted(vecs)

    def test_record_exponent_denominators(self):
        p = LaurentPoly.monomial(exponents(b=Fraction(3, 2), y=-2), coeff=7)
        (rec,) = to_records(p)
        assert rec["coefficient"] == 7
        assert rec["exponents"] == ["0", "3/2", "0", "0", "-2"]
