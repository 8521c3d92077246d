"""Exact twisted Alexander polynomials for knot group presentations.

The package computes the torsion quotient det M_j / det Phi(x_j - 1) of
a deficiency-one presentation with respect to a unimodular linear
representation, entirely in exact arithmetic (prime fields, the
rationals, and simple extensions of either).  A non-monic value at
either end of the reduced quotient certifies that the knot is not
fibered; the classical Alexander polynomial is the one-dimensional
specialization.

Everything is immutable and pure, so values can be shared freely across
threads.
"""

from . import catalog
from .errors import (
    BadGeneratorIndex,
    BothZero,
    ClosureNotKnot,
    DimensionMismatch,
    DivisionByZero,
    DuplicateGenerator,
    FieldMismatch,
    IndependenceViolated,
    IndexOutOfRange,
    InvalidRepresentation,
    LimitExceeded,
    NoValidDenominator,
    NotAbelianizedAutomorphism,
    NotAcyclic,
    NotDeficiencyOne,
    NotInfiniteCyclic,
    NotIrreducible,
    NotSquare,
    NotUnimodular,
    ParseError,
    TwistalexError,
    UnknownGenerator,
)
from .fields import FieldElement, FieldSpec
from .fox import alexander_matrix, fox_derivative, relation_derivative
from .laurent import (
    LaurentPoly,
    RationalFunction,
    divides,
    exact_div,
    poly_divmod,
    poly_gcd,
)
from .polymat import PolyMatrix, det
from .presentation import (
    AbelianizationMap,
    Presentation,
    abelianization,
    braid_automorphism,
    parse_presentation,
    parse_word,
    presentation_from_braid,
    presentation_from_monodromy,
)
from .rep import (
    Representation,
    TensorEvaluator,
    find_representations,
    parse_representation,
    render_representation,
    sl2_class_representatives,
    sl2_elements,
    validate,
)
from .snf import smith_decomposition, smith_normal_form
from .torsion import (
    CertificateResult,
    ColumnPair,
    IndependenceReport,
    ObstructionVerdict,
    SymmetryReport,
    TorsionResult,
    check_column_independence,
    classical_alexander,
    fibered_obstruction,
    polynomial_certificate,
    reidemeister_torsion,
    symmetry_check,
)
from .words import GroupRingElement, Word

__version__ = "0.1.0"

__all__ = [
    "AbelianizationMap",
    "BadGeneratorIndex",
    "BothZero",
    "CertificateResult",
    "ClosureNotKnot",
    "ColumnPair",
    "DimensionMismatch",
    "DivisionByZero",
    "DuplicateGenerator",
    "FieldElement",
    "FieldMismatch",
    "FieldSpec",
    "GroupRingElement",
    "IndependenceReport",
    "IndependenceViolated",
    "IndexOutOfRange",
    "InvalidRepresentation",
    "LaurentPoly",
    "LimitExceeded",
    "NoValidDenominator",
    "NotAbelianizedAutomorphism",
    "NotAcyclic",
    "NotDeficiencyOne",
    "NotInfiniteCyclic",
    "NotIrreducible",
    "NotSquare",
    "NotUnimodular",
    "ObstructionVerdict",
    "ParseError",
    "PolyMatrix",
    "Presentation",
    "RationalFunction",
    "Representation",
    "SymmetryReport",
    "TensorEvaluator",
    "TorsionResult",
    "TwistalexError",
    "UnknownGenerator",
    "Word",
    "abelianization",
    "alexander_matrix",
    "braid_automorphism",
    "catalog",
    "check_column_independence",
    "classical_alexander",
    "det",
    "divides",
    "exact_div",
    "fibered_obstruction",
    "find_representations",
    "fox_derivative",
    "parse_presentation",
    "parse_representation",
    "parse_word",
    "poly_divmod",
    "poly_gcd",
    "polynomial_certificate",
    "presentation_from_braid",
    "presentation_from_monodromy",
    "reidemeister_torsion",
    "relation_derivative",
    "render_representation",
    "sl2_class_representatives",
    "sl2_elements",
    "smith_decomposition",
    "smith_normal_form",
    "symmetry_check",
    "validate",
]
