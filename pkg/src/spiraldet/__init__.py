"""spiraldet: exact arithmetic for spiral-matrix determinant identities."""

from .exponent_algebra import (
    ExponentVector,
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
from .spiral_builder import (
    ExponentMatrix,
    Family,
    LengthMismatchError,
    LinearForm,
    SpiralSpec,
    build_additive,
    build_bracket,
    build_bracket_xx,
    build_generalized_bracket,
    build_qpower,
    matrix_to_latex,
    specialize_additive,
    spiral_exponents,
    step_counts,
)
from .determinant_engine import (
    SizeGuardError,
    VerificationReport,
    WedgeFactorization,
    WedgeNotZeroError,
    antidiagonal_entry_formulas,
    det_bareiss_rational,
    det_cofactor,
    numeric_matrix,
    verify_identity,
    wedge_eliminate_even,
    wedge_eliminate_odd,
)
from .closed_forms import (
    ReductionData,
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
from .funceq import (
    RELATIONS,
    FamilyKind,
    FamilySpec,
    ResidualReport,
    UnclassifiableError,
    UnknownRelationError,
    check_relation,
    classify,
    eval_f,
    eval_g,
)
from .sequences import SequenceId, SequenceSpec, sequence_csv, term, verify_sequence

__version__ = "0.1.0"
