"""Integer-sequence specializations of the spiral determinant formulas.

Three fixed parameter bindings are supported:

* inward  -- centre a = n^2 and b = c = x = y = -1, which turns the additive
  spiral into the classical matrix with 1..n^2 winding from the outside in;
* outward -- all parameters 1, the matrix with 1..n^2 winding from the centre
  out;
* qspiral -- the q-power family with every exponent parameter 1, whose terms
  are Laurent polynomials in a single q.

Terms always come from the closed-form formulas; the verifier compares them
against a brute-force determinant of the specialized matrix, so no sequence
value is ever trusted from an outside table.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .closed_forms import thm1_even, thm1_odd, thm2_even, thm2_odd
from .determinant_engine import (
    VerificationReport,
    Witness,
    det_bareiss_rational,
    det_cofactor,
)
from .exponent_algebra import LaurentPoly, evaluate
from .spiral_builder import build_qpower, specialize_additive


class SequenceId(Enum):
    INWARD = "inward"
    OUTWARD = "outward"
    QSPIRAL = "qspiral"


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence identifier; its parameter binding is fixed and read-only."""

    id: SequenceId

    def additive_point(self, n: int) -> tuple[int, int, int, int, int]:
        if self.id is SequenceId.INWARD:
            return (n * n, -1, -1, -1, -1)
        if self.id is SequenceId.OUTWARD:
            return (1, 1, 1, 1, 1)
        raise ValueError(f"{self.id} has no additive parameter binding")


def q_series(p: LaurentPoly) -> dict[int, int]:
    """Collapse a polynomial with integer exponents onto powers of a single q."""
    out: dict[int, int] = {}
    for vec, coeff in p.terms.items():
        doubled = sum(vec)
        assert doubled % 2 == 0, "q-degree is not an integer"
        deg = doubled // 2
        total = out.get(deg, 0) + coeff
        if total:
            out[deg] = total
        else:
            out.pop(deg, None)
    return out


def q_series_string(series: dict[int, int]) -> str:
    if not series:
        return "0"
    chunks = []
    for deg in sorted(series):
        coeff = series[deg]
        mag = abs(coeff)
        if deg == 0:
            body = str(mag)
        else:
            power = "q" if deg == 1 else f"q^{deg}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)


def _thm1(n: int) -> LaurentPoly:
    return thm1_even(n // 2) if n % 2 == 0 else thm1_odd(n // 2)


def _thm2(n: int) -> LaurentPoly:
    return thm2_even(n // 2) if n % 2 == 0 else thm2_odd(n // 2)


def term(spec: SequenceSpec, n: int):
    """Formula value of the n-th term: an int, or a q-power dict for qspiral."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if spec.id is SequenceId.QSPIRAL:
        return q_series(_thm2(n))
    value = evaluate(_thm1(n), spec.additive_point(n))
    assert value.denominator == 1, "specialized determinant must be an integer"
    return int(value)


def _oracle(spec: SequenceSpec, n: int):
    if spec.id is SequenceId.QSPIRAL:
        return q_series(det_cofactor(build_qpower(n)))
    value = det_bareiss_rational(specialize_additive(n, spec.additive_point(n)))
    assert value.denominator == 1
    return int(value)


def verify_sequence(spec: SequenceSpec, count: int) -> VerificationReport:
    """Compare formula terms against brute-force determinants for n = 1..count."""
    if count < 1:
        raise ValueError("count must be >= 1")
    witnesses = []
    for n in range(1, count + 1):
        expected = term(spec, n)
        actual = _oracle(spec, n)
        if expected != actual:
            witnesses.append(Witness((n,), str(expected), str(actual)))
    return VerificationReport(0, count, len(witnesses), tuple(witnesses))


def sequence_csv(spec: SequenceSpec, count: int) -> str:
    """CSV rows: n, formula term, brute-force oracle, match flag."""
    lines = ["n,term,oracle,match"]
    for n in range(1, count + 1):
        expected = term(spec, n)
        actual = _oracle(spec, n)
        if spec.id is SequenceId.QSPIRAL:
            expected_str, actual_str = q_series_string(expected), q_series_string(actual)
        else:
            expected_str, actual_str = str(expected), str(actual)
        lines.append(f"{n},{expected_str},{actual_str},{str(expected == actual).lower()}")
    return "\n".join(lines) + "\n"
