"""Exception hierarchy shared by the whole package.

Every failure mode that callers are expected to handle has a named class
here, so the command-line front end can report ``error: <Name>: <detail>``
uniformly.  Positioned errors (anything raised while reading one of the
text file formats) additionally carry ``line`` and ``column``, both
1-based.
"""


class TwistalexError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------- algebra

class FieldMismatch(TwistalexError):
    """Two operands belong to different field specifications."""


class DivisionByZero(TwistalexError, ZeroDivisionError):
    """Division by the zero element of a field or polynomial ring."""


class NotSquare(TwistalexError):
    """Determinant requested for a non-square matrix."""


class BothZero(TwistalexError):
    """gcd(0, 0) is undefined."""


class NotIrreducible(TwistalexError):
    """A declared extension modulus has a root in the prime field."""


class NotUnimodular(TwistalexError):
    """A representation image has determinant different from 1."""


# ----------------------------------------------------------------- parsing

class ParseError(TwistalexError):
    """Syntax error in one of the text file formats.

    ``line`` and ``column`` are 1-based positions into the parsed text.
    """

    def __init__(self, message, line, column):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class UnknownGenerator(ParseError):
    """A word refers to a generator that was never declared."""


class DuplicateGenerator(ParseError):
    """The same generator name was declared twice."""


# ------------------------------------------------------------ group theory

class BadGeneratorIndex(TwistalexError):
    """A letter refers to a generator index outside the valid range."""


class IndexOutOfRange(TwistalexError):
    """Derivative requested with respect to a nonexistent generator."""


class NotDeficiencyOne(TwistalexError):
    """The presentation does not have exactly (generators - 1) relations."""


class NotInfiniteCyclic(TwistalexError):
    """The abelianized group is not isomorphic to the integers."""


class NotAbelianizedAutomorphism(TwistalexError):
    """Monodromy images whose exponent-sum matrix is singular over Z."""


class ClosureNotKnot(TwistalexError):
    """The closure of the braid has more than one component."""


# --------------------------------------------------------- representations

class DimensionMismatch(TwistalexError):
    """Matrix shapes or image counts do not line up."""


class InvalidRepresentation(TwistalexError):
    """A representation fails one of the presentation's relations."""

    def __init__(self, relation_index):
        super().__init__(f"relation {relation_index} is not satisfied")
        self.relation_index = relation_index


class LimitExceeded(TwistalexError):
    """The representation search found more results than the cap.

    ``found`` holds the first ``limit`` representations in canonical
    order, so callers can still use the truncated output.
    """

    def __init__(self, limit, found):
        super().__init__(f"more than {limit} representations exist")
        self.limit = limit
        self.found = found


# ----------------------------------------------------------------- torsion

class NotAcyclic(TwistalexError):
    """Every candidate numerator determinant vanishes."""


class NoValidDenominator(TwistalexError):
    """The requested column has a vanishing denominator determinant."""


class IndependenceViolated(TwistalexError):
    """Two columns gave genuinely different torsion values.

    This never happens for correct inputs; it signals an implementation
    bug and is kept as a hard internal consistency check.
    """
