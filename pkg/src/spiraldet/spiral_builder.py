"""Spiral path generation and the matrix families laid out along it.

The path starts at the centre cell of an n x n grid and winds outwards
counterclockwise with the direction cycle right, up, left, down and run
lengths 1, 1, 2, 2, 3, 3, ..., truncated after n^2 - 1 steps.  The centre is
row m+1, column m+1 (1-based) for n = 2m+1 and row m+1, column m for n = 2m;
this convention reproduces the standard displays of all families.

Four families share the path:

* additive  -- entries a + e_b*b + e_c*c + e_x*x + e_y*y, where the step
  counters e_* record how many up/down/right/left steps reach the cell;
* qpower    -- the same data read multiplicatively: the monomial
  a * b^e_b * c^e_c * x^e_x * y^e_y (the five variables standing for
  q^a, ..., q^y, so the entry encodes q to the additive entry);
* bracket   -- the bracket m - 1/m of that monomial;
* generalized bracket -- like bracket, but each up/down step multiplies by a
  caller-chosen monomial; horizontal steps multiply by x in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .exponent_algebra import (
    NVARS,
    ExponentVector,
    LaurentPoly,
    as_exponent_vector,
    bracket,
    to_records,
)

_DIRS = {"right": (0, 1), "up": (-1, 0), "left": (0, -1), "down": (1, 0)}
_ORDER = ("right", "up", "left", "down")
# slot of each direction in the (e_b, e_c, e_x, e_y) counter tuple
_COUNTER_SLOT = {"up": 0, "down": 1, "right": 2, "left": 3}


class Family(Enum):
    ADDITIVE = "additive"
    QPOWER = "qpower"
    BRACKET = "bracket"
    GENERALIZED_BRACKET = "generalized"


@dataclass(frozen=True)
class SpiralSpec:
    """Size, family and (for the generalized family) per-step increments."""

    n: int
    family: Family
    up_increments: tuple[ExponentVector, ...] | None = None
    down_increments: tuple[ExponentVector, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")


class LengthMismatchError(ValueError):
    """Increment sequences do not match the path's up/down step counts."""


def centre_cell(n: int) -> tuple[int, int]:
    """0-based (row, col) of the path start."""
    if n % 2:
        return n // 2, n // 2
    return n // 2, n // 2 - 1


def spiral_walk(n: int) -> Iterator[tuple[str | None, int, int]]:
    """Yield (step direction, row, col) for every path cell; centre first with direction None."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r, c = centre_cell(n)
    yield None, r, c
    remaining = n * n - 1
    run = 0
    while remaining:
        direction = _ORDER[run % 4]
        dr, dc = _DIRS[direction]
        for _ in range(min(run // 2 + 1, remaining)):
            r += dr
            c += dc
            yield direction, r, c
        remaining -= min(run // 2 + 1, remaining)
        run += 1


def step_counts(n: int) -> dict[str, int]:
    """Number of path steps taken in each direction."""
    counts = {d: 0 for d in _ORDER}
    for direction, _, _ in spiral_walk(n):
        if direction is not None:
            counts[direction] += 1
    return counts


@dataclass(frozen=True)
class ExponentMatrix:
    """Per-cell step counters (e_b, e_c, e_x, e_y); the centre cell is all zeros."""

    n: int
    cells: tuple[tuple[tuple[int, int, int, int], ...], ...]

    def at(self, row: int, col: int) -> tuple[int, int, int, int]:
        """0-based access."""
        return self.cells[row][col]


def spiral_exponents(n: int) -> ExponentMatrix:
    grid: list[list[tuple[int, int, int, int] | None]] = [[None] * n for _ in range(n)]
    counters = [0, 0, 0, 0]
    for direction, r, c in spiral_walk(n):
        if direction is not None:
            counters[_COUNTER_SLOT[direction]] += 1
        grid[r][c] = tuple(counters)
    assert all(cell is not None for row in grid for cell in row)
    return ExponentMatrix(n, tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class LinearForm:
    """The additive entry a + e_b*b + e_c*c + e_x*x + e_y*y."""

    e_b: int
    e_c: int
    e_x: int
    e_y: int

    def to_poly(self) -> LaurentPoly:
        poly = LaurentPoly.variable("a")
        for coeff, name in ((self.e_b, "b"), (self.e_c, "c"), (self.e_x, "x"), (self.e_y, "y")):
            if coeff:
                poly = poly + coeff * LaurentPoly.variable(name)
        return poly

    def evaluate(self, point: Sequence) -> Fraction:
        a, b, c, x, y = (Fraction(v) for v in point)
        return a + self.e_b * b + self.e_c * c + self.e_x * x + self.e_y * y

    def _render(self, sep: str) -> str:
        parts = ["a"]
        for coeff, name in ((self.e_b, "b"), (self.e_c, "c"), (self.e_x, "x"), (self.e_y, "y")):
            if coeff == 0:
                continue
            parts.append(f"+{name}" if coeff == 1 else f"+{coeff}{sep}{name}")
        return "".join(parts)

    def to_latex(self) -> str:
        return self._render(" ")

    def __str__(self) -> str:
        return self._render("")


def build_additive(n: int) -> list[list[LinearForm]]:
    exps = spiral_exponents(n)
    return [[LinearForm(*exps.at(i, j)) for j in range(n)] for i in range(n)]


def _cell_monomial(counters: tuple[int, int, int, int]) -> ExponentVector:
    e_b, e_c, e_x, e_y = counters
    return (2, 2 * e_b, 2 * e_c, 2 * e_x, 2 * e_y)


def build_qpower(n: int) -> list[list[LaurentPoly]]:
    exps = spiral_exponents(n)
    return [[LaurentPoly.monomial(_cell_monomial(exps.at(i, j))) for j in range(n)]
            for i in range(n)]


def build_bracket(n: int) -> list[list[LaurentPoly]]:
    exps = spiral_exponents(n)
    return [[bracket(_cell_monomial(exps.at(i, j))) for j in range(n)] for i in range(n)]


def build_bracket_xx(n: int) -> list[list[LaurentPoly]]:
    """Bracket family with equal horizontal multipliers (y set to x)."""
    exps = spiral_exponents(n)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            e_b, e_c, e_x, e_y = exps.at(i, j)
            row.append(bracket((2, 2 * e_b, 2 * e_c, 2 * (e_x + e_y), 0)))
        out.append(row)
    return out


def build_generalized_bracket(spec: SpiralSpec) -> list[list[LaurentPoly]]:
    """Bracket spiral whose k-th up/down step multiplies by a chosen monomial.

    Horizontal steps multiply by x in both directions; freeing the horizontal
    multipliers as well would break the wedge elimination, so only the
    vertical increments are parameters.
    """
    if spec.family is not Family.GENERALIZED_BRACKET:
        raise ValueError("spec.family must be GENERALIZED_BRACKET")
    counts = step_counts(spec.n)
    ups = tuple(as_exponent_vector(v) for v in (spec.up_increments or ()))
    downs = tuple(as_exponent_vector(v) for v in (spec.down_increments or ()))
    if len(ups) != counts["up"] or len(downs) != counts["down"]:
        raise LengthMismatchError(
            f"need {counts['up']} up / {counts['down']} down increments, "
            f"got {len(ups)} / {len(downs)}")
    n = spec.n
    grid: list[list[LaurentPoly | None]] = [[None] * n for _ in range(n)]
    accum = [0] * NVARS
    accum[0] = 2  # start from the monomial a
    n_up = n_down = 0
    for direction, r, c in spiral_walk(n):
        if direction in ("right", "left"):
            accum[3] += 2
        elif direction == "up":
            accum = [p + q for p, q in zip(accum, ups[n_up])]
            n_up += 1
        elif direction == "down":
            accum = [p + q for p, q in zip(accum, downs[n_down])]
            n_down += 1
        grid[r][c] = bracket(tuple(accum))
    return [[cell for cell in row] for row in grid]


def specialize_additive(n: int, values: Sequence) -> list[list[Fraction]]:
    """Numeric additive spiral at the given (a, b, c, x, y) values."""
    return [[form.evaluate(values) for form in row] for row in build_additive(n)]


# -- serialization ----------------------------------------------------------


def _cell_json(cell):
    if isinstance(cell, LinearForm):
        return {"e_b": cell.e_b, "e_c": cell.e_c, "e_x": cell.e_x, "e_y": cell.e_y}
    if isinstance(cell, LaurentPoly):
        return to_records(cell)
    return str(Fraction(cell))


def matrix_to_json_dict(matrix, family: Family, n: int) -> dict:
    return {
        "n": n,
        "family": family.value,
        "entries": [[_cell_json(cell) for cell in row] for row in matrix],
    }


def _poly_latex(p: LaurentPoly) -> str:
    from .exponent_algebra import VARIABLES

    if not p.terms:
        return "0"
    chunks = []
    for vec in sorted(p.terms):
        coeff = p.terms[vec]
        factors = []
        for name, d in zip(VARIABLES, vec):
            if not d:
                continue
            if d == 2:
                factors.append(name)
            elif d % 2 == 0:
                factors.append(f"{name}^{{{d // 2}}}")
            else:
                factors.append(f"{name}^{{{d}/2}}")
        mag = abs(coeff)
        body = " ".join(factors) if factors else ""
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag} {body}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+{body}" if coeff > 0 else f"-{body}")
    return "".join(chunks)


def matrix_to_latex(matrix) -> str:
    """pmatrix emission; additive entries match the displayed layout entrywise."""
    lines = []
    for row in matrix:
        cells = []
        for cell in row:
            if isinstance(cell, LinearForm):
                cells.append(cell.to_latex())
            elif isinstance(cell, LaurentPoly):
                cells.append(_poly_latex(cell))
            else:
                cells.append(str(Fraction(cell)))
        lines.append(" & ".join(cells) + r" \\")
    return "\\begin{pmatrix}\n" + "\n".join(lines) + "\n\\end{pmatrix}"
