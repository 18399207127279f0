"""Closed-form determinant formulas for the three spiral families, plus the
row/column reduction procedures that prove the additive and q-power cases.

Theorem 1 (additive family): det of the n x n additive spiral is a signed
quadratic prefactor times prod_i (i(b+c) + (i+1)(x+y)).

Theorem 2 (q-power family): det is a signed monomial times
prod_i (1 - q^(i(b+c)+(i+1)(x+y))), written multiplicatively in the variables
standing for q^a ... q^y.

Theorem 3 (bracket family with equal horizontal multipliers): det is a signed
product of brackets and angle brackets, some of whose factors carry
half-integer exponents even though the expanded product never does.

Theorem 1 polynomials reuse the LaurentPoly container with all exponents
nonnegative and the variables reinterpreted as additive indeterminates; there
is no separate dense-polynomial type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .determinant_engine import VerificationReport, Witness, sample_point
from .exponent_algebra import (
    LaurentPoly,
    angle,
    bracket,
    evaluate,
    exponents,
)
from .spiral_builder import build_qpower

_A = LaurentPoly.variable("a")
_B = LaurentPoly.variable("b")
_C = LaurentPoly.variable("c")
_X = LaurentPoly.variable("x")
_Y = LaurentPoly.variable("y")


def _linear_product(count: int) -> LaurentPoly:
    """prod_{i=1..count} (i(b+c) + (i+1)(x+y)); empty products are 1."""
    out = LaurentPoly.one()
    for i in range(1, count + 1):
        out = out * (i * (_B + _C) + (i + 1) * (_X + _Y))
    return out


def thm1_even(n: int) -> LaurentPoly:
    """Closed-form determinant of the 2n x 2n additive spiral matrix."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return LaurentPoly.one()
    quad = (_A * _X + n * n * _B * _X + n * (n - 1) * _C * _X + n * n * _X * _X
            + _A * _Y + (n - 1) * (n - 1) * _B * _Y + n * (n - 1) * _C * _Y
            + n * (n - 1) * _Y * _Y + n * (2 * n - 1) * _X * _Y)
    sign = 1 if (n + 1) % 2 == 0 else -1
    return sign * quad * _linear_product(2 * n - 2)


def thm1_odd(n: int) -> LaurentPoly:
    """Closed-form determinant of the (2n+1) x (2n+1) additive spiral matrix."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return _A
    quad = (_A * _X + n * n * _B * _X + n * (n - 1) * _C * _X + n * n * _X * _X
            + _A * _Y + n * n * _B * _Y + n * (n + 1) * _C * _Y
            + n * (n + 1) * _Y * _Y + n * (2 * n + 1) * _X * _Y)
    sign = 1 if n % 2 == 0 else -1
    return sign * quad * _linear_product(2 * n - 1)


def _exact_third(value: int) -> int:
    q, r = divmod(value, 3)
    if r:
        raise ArithmeticError(f"{value} is not divisible by 3")
    return q


def _qpower_tail(count: int) -> LaurentPoly:
    """prod_{i=0..count-1} (1 - b^i c^i x^(i+1) y^(i+1))."""
    out = LaurentPoly.one()
    for i in range(count):
        out = out * (1 - LaurentPoly.monomial(exponents(b=i, c=i, x=i + 1, y=i + 1)))
    return out


def thm2_even(n: int) -> LaurentPoly:
    """Closed-form determinant of the 2n x 2n q-power spiral matrix."""
    if n < 0:
        raise ValueError("n must be >= 0")
    bx = _exact_third(n * (2 * n * n + 1))
    cy = _exact_third(2 * (n - 1) * n * (n + 1))
    prefactor = LaurentPoly.monomial(exponents(a=2 * n, b=bx, c=cy, x=bx, y=cy))
    sign = 1 if n % 2 == 0 else -1
    return sign * prefactor * _qpower_tail(2 * n - 1)


def thm2_odd(n: int) -> LaurentPoly:
    """Closed-form determinant of the (2n+1) x (2n+1) q-power spiral matrix."""
    if n < 0:
        raise ValueError("n must be >= 0")
    e = _exact_third(n * (n + 1) * (2 * n + 1))
    prefactor = LaurentPoly.monomial(exponents(a=2 * n + 1, b=e, c=e, x=e, y=e))
    sign = 1 if n % 2 == 0 else -1
    return sign * prefactor * _qpower_tail(2 * n)


def _assert_integer_exponents(p: LaurentPoly) -> LaurentPoly:
    for vec in p.terms:
        if any(d % 2 for d in vec):
            raise AssertionError("expanded product has a half-integer exponent")
    return p


def _bracket_run(count: int) -> LaurentPoly:
    """prod_{k=0..count-1} [(bc)^(k/2) x^(k+1)]."""
    out = LaurentPoly.one()
    for k in range(count):
        out = out * bracket(exponents(b=Fraction(k, 2), c=Fraction(k, 2), x=k + 1))
    return out


def _angle_first(k: int) -> LaurentPoly:
    return angle(exponents(a=1, b=k * (k + 1), c=k * k, x=k * (2 * k + 1)))


def _angle_second(k: int) -> LaurentPoly:
    return angle(exponents(a=1, b=Fraction(2 * k * k - 2 * k + 1, 2),
                           c=Fraction(2 * k * k - 1, 2), x=k * (2 * k - 1)))


def thm3_even(n: int) -> LaurentPoly:
    """Closed-form determinant of the 2n x 2n bracket spiral with y = x.

    Individual factors carry half-integer exponents of b and c; the expanded
    result is asserted to have integer exponents only.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return LaurentPoly.one()
    out = bracket(exponents(a=2, b=2 * n * n - 2 * n + 1, c=2 * n * n - 2 * n,
                            x=2 * n * (2 * n - 1)))
    out = out * _bracket_run(2 * n - 1)
    for k in range(1, n):
        out = out * _angle_first(k) * _angle_second(k)
    sign = 1 if (n + 1) % 2 == 0 else -1
    return _assert_integer_exponents(sign * out)


def thm3_odd(n: int) -> LaurentPoly:
    """Closed-form determinant of the (2n+1) x (2n+1) bracket spiral with y = x."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return bracket(exponents(a=1))
    out = bracket(exponents(a=2, b=2 * n * n, c=2 * n * n, x=2 * n * (2 * n + 1)))
    out = out * _bracket_run(2 * n)
    for k in range(1, n):
        out = out * _angle_first(k)
    for k in range(1, n + 1):
        out = out * _angle_second(k)
    sign = 1 if n % 2 == 0 else -1
    return _assert_integer_exponents(sign * out)


# -- reduction procedures ----------------------------------------------------


@dataclass(frozen=True)
class ReductionData:
    """One size-reduction step of the additive family's determinant.

    The (2n+1) -> 2n step ("odd" parity) rewrites the determinant as
    scalar_factor times the determinant of the 2n-size matrix with new centre
    centre_numerator/pivot, new up increment up_increment and new down
    increment down_increment (x and y unchanged); the 2n -> 2n-1 step ("even")
    is analogous.  The centre is kept as an explicit numerator/pivot pair
    because it is not polynomial.
    """

    parity: str
    n: int
    centre_numerator: LaurentPoly
    pivot: LaurentPoly
    up_increment: LaurentPoly
    down_increment: LaurentPoly
    scalar_factor: LaurentPoly
    auxiliary: dict = field(default_factory=dict)


def _border_entries_odd(n: int) -> dict[str, LaurentPoly]:
    """The labelled border entries of the (2n+1)-size additive spiral."""
    return {
        "E1": _A + n * n * _B + n * n * _C + n * n * _X + n * (n + 1) * _Y,
        "E2": _A + n * n * _B + (n * n + n - 1) * _C + n * n * _X + n * (n + 1) * _Y,
        "E3": _A + (n - 1) ** 2 * _B + n * (n - 1) * _C + (n - 1) ** 2 * _X + n * (n - 1) * _Y,
        "E4": _A + (n - 1) ** 2 * _B + n * (n - 1) * _C + n * n * _X + n * (n - 1) * _Y,
        "E5": _A + n * n * _B + n * (n + 1) * _C + n * n * _X + n * (n + 1) * _Y,
        "E6": _A + n * n * _B + n * (n + 1) * _C + (n * n + 1) * _X + n * (n + 1) * _Y,
        "E7": _A + n * n * _B + n * (n + 1) * _C + n * (n + 2) * _X + n * (n + 1) * _Y,
    }


def reduce_odd(n: int) -> ReductionData:
    """Reduction of the (2n+1)-size additive determinant to size 2n.

    Subtracting the next-to-last row from the last row leaves a row that is
    constant except in the first column; eliminating it with the first column
    (pivot c) yields scalar_factor c and the new parameters below.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    borders = _border_entries_odd(n)
    d1 = (2 * n - 1) * _B + 2 * n * _C + 2 * n * _X + 2 * n * _Y
    b1 = 2 * n * (_B + _C + _X + _Y)
    c1 = -(2 * n - 1) * (_B + _C) - 2 * n * (_X + _Y)
    numerator = _A * _C - d1 * borders["E1"]
    auxiliary = {"D1": d1, **borders}
    return ReductionData("odd", n, numerator, _C, b1, c1, _C, auxiliary)


def reduce_even(n: int) -> ReductionData:
    """Reduction of the 2n-size additive determinant to size 2n-1.

    Subtracting the second row from the first leaves a row that is constant
    except in the last column; eliminating it with the last column (pivot b)
    yields scalar_factor -b and the new parameters below.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d2 = (2 * n - 1) * _B + (2 * n - 2) * _C + (2 * n - 1) * _X + (2 * n - 1) * _Y
    companion = _A + n * (n - 1) * _B + n * (n - 1) * _C + n * n * _X + n * (n - 1) * _Y
    b2 = -(2 * n - 2) * (_B + _C) - (2 * n - 1) * (_X + _Y)
    c2 = (2 * n - 1) * (_B + _C + _X + _Y)
    numerator = _A * _B - d2 * companion
    return ReductionData("even", n, numerator, _B, b2, c2, -_B, {"D2": d2, "E": companion})


def verify_reduction(parity: str, n: int, trials: int, seed: int) -> VerificationReport:
    """Check the reduction relation at random integer points with exact rationals.

    Points whose derived parameters hit zero (where the closed forms cannot be
    evaluated as Laurent polynomials) are skipped deterministically.
    """
    if parity == "odd":
        data = reduce_odd(n)
        small, big = thm1_even(n), thm1_odd(n)
    elif parity == "even":
        data = reduce_even(n)
        small, big = thm1_odd(n - 1), thm1_even(n)
    else:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    witnesses = []
    done = 0
    attempt = 0
    while done < trials:
        point = sample_point(seed, attempt)
        attempt += 1
        pivot = evaluate(data.pivot, point)
        centre = evaluate(data.centre_numerator, point) / pivot
        derived = (centre, evaluate(data.up_increment, point),
                   evaluate(data.down_increment, point), Fraction(point[3]), Fraction(point[4]))
        if any(v == 0 for v in derived):
            continue
        done += 1
        lhs = evaluate(data.scalar_factor, point) * evaluate(small, derived)
        rhs = evaluate(big, point)
        if lhs != rhs:
            witnesses.append(Witness(point, lhs, rhs))
    return VerificationReport(seed, trials, len(witnesses), tuple(witnesses))


def qreduction_check(n: int) -> VerificationReport:
    """Row subtraction on the q-power spiral leaves a boundary row with one nonzero entry.

    For odd n the last row minus the monomial-ratio multiple of the
    next-to-last row vanishes except in the first column; for even n the
    first row minus the multiple of the second row vanishes except in the
    last column.  No column operations are needed.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    q = build_qpower(n)

    def _mono(p: LaurentPoly):
        (vec, coeff), = p.terms.items()
        assert coeff == 1
        return vec

    if n % 2:
        target, source, ref_col, expect_col = n - 1, n - 2, 1, 0
    else:
        target, source, ref_col, expect_col = 0, 1, 0, n - 1
    ratio = LaurentPoly.monomial(tuple(
        t - s for t, s in zip(_mono(q[target][ref_col]), _mono(q[source][ref_col]))))
    new_row = [q[target][j] - ratio * q[source][j] for j in range(n)]
    nonzero = [j for j, entry in enumerate(new_row) if entry]
    if nonzero == [expect_col]:
        return VerificationReport(0, 1, 0, ())
    witness = Witness((n,), f"nonzero columns {nonzero}", f"expected [{expect_col}]")
    return VerificationReport(0, 1, 1, (witness,))
