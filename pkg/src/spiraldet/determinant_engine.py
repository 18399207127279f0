"""Exact determinants, wedge elimination, and randomized identity checking.

Two determinant engines cross-check each other: a memoized cofactor expansion
that works over any commutative ring (used symbolically on Laurent-polynomial
matrices, guarded to n <= 8), and a fraction-free Bareiss elimination over
exact rationals for numeric work at any size.

The wedge elimination implements the column-operation proof of the bracket
family's determinant factorization: replacing C_j by C_j - <x>*C_{j-1} +
C_{j-2} (even sizes; the mirrored C_j - <x>*C_{j+1} + C_{j+2} for odd sizes)
zeroes two triangular wedges, after which the determinant reads off as a
signed 2x2 corner factor times the product of an antidiagonal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exponent_algebra import LaurentPoly, angle, bracket, evaluate, exponents

COFACTOR_SIZE_GUARD = 8

_ANGLE_X = angle(exponents(x=1))


class SizeGuardError(ValueError):
    """Symbolic determinant requested beyond the size guard without override."""


class WedgeNotZeroError(ValueError):
    """A wedge cell failed to vanish, so the input is outside the elimination's hypotheses."""

    def __init__(self, row: int, col: int, value):
        self.row = row  # 1-based
        self.col = col
        self.value = value
        super().__init__(f"wedge cell ({row}, {col}) is nonzero: {value!r}")


def det_cofactor(matrix: Sequence[Sequence], *, allow_large: bool = False):
    """Exact determinant by Laplace expansion, memoized over column subsets.

    Works for any entries supporting ring arithmetic with ints (LaurentPoly,
    Fraction, int).  O(n * 2^n) subproblems; refuses n > 8 unless
    ``allow_large`` is set.
    """
    n = len(matrix)
    if n > COFACTOR_SIZE_GUARD and not allow_large:
        raise SizeGuardError(f"n={n} exceeds the size guard {COFACTOR_SIZE_GUARD}")
    if n == 0:
        return 1
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    memo = {}

    def minor(mask: int):
        # determinant of the submatrix on rows (n - popcount(mask))..n-1
        # and the columns set in mask
        if mask == 0:
            return 1
        try:
            return memo[mask]
        except KeyError:
            pass
        row = n - mask.bit_count()
        sign = 1
        total = 0
        rest = mask
        while rest:
            low = rest & -rest
            entry = matrix[row][low.bit_length() - 1]
            if entry:
                total = total + sign * entry * minor(mask ^ low)
            sign = -sign
            rest ^= low
        memo[mask] = total
        return total

    return minor((1 << n) - 1)


def det_bareiss_rational(matrix: Sequence[Sequence]) -> Fraction:
    """Exact rational determinant by fraction-free elimination with row-swap pivoting."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    m = [[Fraction(v) for v in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - head * row_k[j]) / prev
            row_i[k] = Fraction(0)
        prev = pivot
    return sign * m[n - 1][n - 1]


def numeric_matrix(matrix: Sequence[Sequence[LaurentPoly]], point) -> list[list[Fraction]]:
    """Evaluate every polynomial entry at the point."""
    return [[evaluate(entry, point) for entry in row] for row in matrix]


# -- randomized identity verification ---------------------------------------


@dataclass(frozen=True)
class Witness:
    point: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    trials: int
    failures: int
    witnesses: tuple[Witness, ...]

    def __post_init__(self):
        if self.failures != len(self.witnesses):
            raise ValueError("failures must equal the number of witnesses")

    def ok(self) -> bool:
        return self.failures == 0

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "failures": self.failures,
            "witnesses": [
                {"point": [str(v) for v in w.point], "lhs": str(w.lhs), "rhs": str(w.rhs)}
                for w in self.witnesses
            ],
        }


def sample_point(seed: int, index: int, lo: int = -50, hi: int = 50) -> tuple[int, ...]:
    """Deterministic per-trial point of 5 nonzero integers; independent of trial order."""
    rng = random.Random(f"{seed}:{index}")
    point = []
    for _ in range(5):
        v = rng.randint(lo, hi - 1)
        point.append(v if v < 0 else v + 1)
    return tuple(point)


def verify_identity(lhs_gen: Callable[[tuple], Sequence[Sequence]],
                    rhs: LaurentPoly, trials: int, seed: int) -> VerificationReport:
    """Compare det(lhs_gen(point)) against rhs evaluated at the same random points.

    All arithmetic is exact, so every recorded mismatch is a genuine
    counterexample.  Each trial's point depends only on (seed, trial index),
    making the report independent of evaluation order.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    witnesses = []
    for t in range(trials):
        point = sample_point(seed, t)
        lhs = det_bareiss_rational(lhs_gen(point))
        rhs_value = evaluate(rhs, point)
        if lhs != rhs_value:
            witnesses.append(Witness(point, lhs, rhs_value))
    return VerificationReport(seed, trials, len(witnesses), tuple(witnesses))


# -- wedge elimination -------------------------------------------------------


@dataclass(frozen=True)
class WedgeFactorization:
    """sign * corner_factor * prod(antidiagonal_factors) equals the determinant."""

    sign: int
    corner_factor: LaurentPoly
    antidiagonal_factors: tuple[LaurentPoly, ...]

    def product(self) -> LaurentPoly:
        out = self.sign * self.corner_factor
        for factor in self.antidiagonal_factors:
            out = out * factor
        return out


def _even_zero_cells(n: int):
    """1-based wedge cells of the transformed 2n x 2n matrix that must vanish."""
    big = 2 * n
    for i in range(1, n + 1):
        for j in range(max(3, i + 1), big + 1 - i + 1):
            yield i, j
    for i in range(n + 1, big + 1):
        for j in range(max(3, big - i + 3), min(i, big) + 1):
            yield i, j


def _odd_zero_cells(n: int):
    """1-based wedge cells of the transformed (2n+1) x (2n+1) matrix."""
    big = 2 * n + 1
    for i in range(1, n + 1):
        for j in range(i, 2 * n - i + 1):
            yield i, j
    for i in range(n + 2, big + 1):
        for j in range(2 * n + 2 - i, 2 * n - 1 + 1):
            yield i, j


def _check_square(z) -> int:
    size = len(z)
    if any(len(row) != size for row in z):
        raise ValueError("matrix must be square")
    return size


def wedge_eliminate_even(z) -> tuple[list[list[LaurentPoly]], WedgeFactorization]:
    """Column operations C_j <- C_j - <x>*C_{j-1} + C_{j-2} for j = 3..2n.

    Asserts that both wedges vanish exactly and returns the factorization
    (sign (-1)^(n-1), 2x2 corner factor from columns 1-2 and rows 1/2n, and
    the antidiagonal entries of the transformed matrix).
    """
    size = _check_square(z)
    if size % 2 or size < 2:
        raise ValueError("even-size elimination needs an even matrix of size >= 2")
    n = size // 2
    t = [[z[i][j] - _ANGLE_X * z[i][j - 1] + z[i][j - 2] if j >= 2 else z[i][j]
          for j in range(size)] for i in range(size)]
    for i, j in _even_zero_cells(n):
        if t[i - 1][j - 1]:
            raise WedgeNotZeroError(i, j, t[i - 1][j - 1])
    corner = z[0][0] * z[size - 1][1] - z[0][1] * z[size - 1][0]
    factors = tuple(t[i - 1][2 * n - i + 1] for i in range(2, 2 * n))
    sign = -1 if (n - 1) % 2 else 1
    return t, WedgeFactorization(sign, corner, factors)


def wedge_eliminate_odd(z) -> tuple[list[list[LaurentPoly]], WedgeFactorization]:
    """Column operations C_j <- C_j - <x>*C_{j+1} + C_{j+2} for j = 1..2n-1."""
    size = _check_square(z)
    if size % 2 == 0:
        raise ValueError("odd-size elimination needs an odd matrix")
    if size == 1:
        return [list(z[0])], WedgeFactorization(1, z[0][0], ())
    n = size // 2
    t = [[z[i][j] - _ANGLE_X * z[i][j + 1] + z[i][j + 2] if j <= size - 3 else z[i][j]
          for j in range(size)] for i in range(size)]
    for i, j in _odd_zero_cells(n):
        if t[i - 1][j - 1]:
            raise WedgeNotZeroError(i, j, t[i - 1][j - 1])
    corner = z[0][size - 2] * z[size - 1][size - 1] - z[0][size - 1] * z[size - 1][size - 2]
    factors = tuple(t[i - 1][2 * n + 1 - i - 1] for i in range(2, 2 * n + 1))
    sign = -1 if n % 2 else 1
    return t, WedgeFactorization(sign, corner, factors)


def antidiagonal_entry_formulas(n: int, k: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Closed forms of the two antidiagonal entries indexed by k = n-i+1 (even case).

    Each is a bracket times an angle bracket:

        [(bc)^k x^(2k+1)] <a b^(k(k+1)) c^(k^2) x^(k(2k+1))>
        [(bc)^((2k-1)/2) x^(2k)] <a b^((2k^2-2k+1)/2) c^((2k^2-1)/2) x^(k(2k-1))>
    """
    if not 1 <= k <= n - 1:
        raise IndexError(f"k must satisfy 1 <= k <= n-1, got k={k}, n={n}")
    first = bracket(exponents(b=k, c=k, x=2 * k + 1)) * angle(
        exponents(a=1, b=k * (k + 1), c=k * k, x=k * (2 * k + 1)))
    second = bracket(
        exponents(b=Fraction(2 * k - 1, 2), c=Fraction(2 * k - 1, 2), x=2 * k)) * angle(
        exponents(a=1, b=Fraction(2 * k * k - 2 * k + 1, 2),
                  c=Fraction(2 * k * k - 1, 2), x=k * (2 * k - 1)))
    return first, second
