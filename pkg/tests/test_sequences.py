"""Tests for the integer-sequence specializations."""

import pytest

from spiraldet.determinant_engine import det_bareiss_rational
from spiraldet.sequences import (
    SequenceId,
    SequenceSpec,
    q_series_string,
    sequence_csv,
    term,
    verify_sequence,
)
from spiraldet.spiral_builder import specialize_additive

INWARD = SequenceSpec(SequenceId.INWARD)
OUTWARD = SequenceSpec(SequenceId.OUTWARD)
QSPIRAL = SequenceSpec(SequenceId.QSPIRAL)


class TestTerm:
    def test_first_terms_are_one(self):
        assert term(INWARD, 1) == 1
        assert term(OUTWARD, 1) == 1

    def test_inward_2x2(self):
        # [[1, 2], [4, 3]] has determinant -5
        assert term(INWARD, 2) == -5

    def test_inward_4_against_brute_force(self):
        expected = det_bareiss_rational(specialize_additive(4, (16, -1, -1, -1, -1)))
        assert term(INWARD, 4) == expected == 660

    def test_outward_4_against_brute_force(self):
        expected = det_bareiss_rational(specialize_additive(4, (1, 1, 1, 1, 1)))
        assert term(OUTWARD, 4) == expected == -1380

    def test_classical_display_values(self):
        # determinants of the displayed 5x5 integer spirals, computed by
        # brute force on the typed-in displays (rotation-invariant)
        assert term(INWARD, 5) == 11760
        assert term(OUTWARD, 5) == 31920

    def test_terms_are_integers(self):
        for spec in (INWARD, OUTWARD):
            for n in range(1, 11):
                assert isinstance(term(spec, n), int)

    def test_qspiral_term_is_q_polynomial(self):
        # det of [[q^4, q^3], [q, q^2]] is q^6 - q^4
        series = term(QSPIRAL, 2)
        assert series == {4: -1, 6: 1}
        assert q_series_string(series) == "-q^4 + q^6"


class TestVerify:
    def test_inward_8(self):
        assert verify_sequence(INWARD, 8).failures == 0

    def test_outward_8(self):
        assert verify_sequence(OUTWARD, 8).failures == 0

    def test_qspiral_5(self):
        assert verify_sequence(QSPIRAL, 5).failures == 0

    def test_bad_count(self):
        with pytest.raises(ValueError):
            verify_sequence(INWARD, 0)


class TestCsv:
    def test_header_and_rows(self):
        csv_text = sequence_csv(INWARD, 4)
        lines = csv_text.strip().splitlines()
        assert lines[0] == "n,term,oracle,match"
        assert lines[2] == "2,-5,-5,true"
        assert len(lines) == 5
        assert all(line.endswith("true") for line in lines[1:])

    def test_qspiral_rows_serialize_polynomials(self):
        lines = sequence_csv(QSPIRAL, 2).strip().splitlines()
        assert lines[2].startswith("2,-q^4 + q^6,")
