"""The torsion quotient, its diagnostics, and the fiberedness obstruction.

For a deficiency-one presentation with u generators and a validated
SL(n, F) representation, remove one block column j from the evaluated
Alexander matrix M and form

    det M_j / det Phi(x_j - 1).

The quotient is independent of j up to a unit +-t^{nk} (t^{nk} only for
even n), and it is nonzero exactly when some det M_j is nonzero.  The
reduced form stored here is normalized to the printable representative:
powers of t stripped from both parts and the denominator made monic.
A knot whose exterior fibers over the circle forces both parts to be
monic with unit constant terms, so any non-unit coefficient at either
end certifies that the knot is NOT fibered; the converse never holds,
a passing check proves nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    IndependenceViolated,
    InvalidRepresentation,
    NoValidDenominator,
    NotAcyclic,
    NotDeficiencyOne,
)
from .fox import alexander_matrix
from .laurent import LaurentPoly, RationalFunction, divides, exact_div, poly_gcd
from .polymat import PolyMatrix, det
from .presentation import Presentation, abelianization
from .rep import Representation, TensorEvaluator, mat_det, mat_identity, mat_sub, validate
from .words import Word


@dataclass(frozen=True)
class TorsionResult:
    """The two determinants, their normalized quotient, and bookkeeping.

    ``reduced`` equals numerator/denominator up to the inherent unit
    ambiguity; it is None only in the (theoretically unreachable)
    fallback where no column has a nonzero denominator.  ``unit_sign``
    records whether the ambiguity group is {+-t^(nk)} (odd n) or just
    {t^(nk)} (even n).
    """

    column: int
    numerator: LaurentPoly
    denominator: LaurentPoly
    reduced: RationalFunction | None
    dimension: int
    is_polynomial: bool
    denominator_usable: bool = True

    @property
    def unit_sign(self) -> bool:
        return self.dimension % 2 == 1

    def unit_group(self) -> str:
        n = self.dimension
        return f"±t^({n}k)" if self.unit_sign else f"t^({n}k)"


def _prepare(p: Presentation, rho: Representation):
    if not p.is_deficiency_one():
        raise NotDeficiencyOne(
            f"{len(p.relations)} relations on {p.rank} generators")
    bad = validate(rho, p)
    if bad is not None:
        raise InvalidRepresentation(bad)
    ab = abelianization(p)
    ev = TensorEvaluator(rho, ab)
    return ev, alexander_matrix(p, ev)


def _minor(m: PolyMatrix, j: int, n: int) -> PolyMatrix:
    return m.delete_columns(range(j * n, (j + 1) * n))


def _normalize(num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
    """Lowest terms, both parts t-free with nonzero constant term, monic
    denominator.  This picks one representative of the unit orbit; it is
    the same representative the worked examples print."""
    g = poly_gcd(num, den)
    n1 = exact_div(num, g)
    d1 = exact_div(den, g)
    n1 = n1.strip()[1]
    d1 = d1.strip()[1]
    c = d1.leading_coeff()
    if not c.is_one():
        inv = c.inverse()
        n1 = n1.scale(inv)
        d1 = d1.scale(inv)
    return RationalFunction(n1, d1)


def reidemeister_torsion(p: Presentation, rho: Representation,
                         column: int | None = None) -> TorsionResult:
    """The torsion quotient for one removed column.

    When ``column`` is None the first generator whose denominator
    determinant is nonzero is used.  Raises :class:`NotAcyclic` when
    every numerator determinant vanishes and :class:`NoValidDenominator`
    when an explicitly requested column has denominator zero.
    """
    ev, m = _prepare(p, rho)
    n = rho.dimension
    u = p.rank

    if column is not None:
        den = det(ev.generator_minus_one(column))
        if den.is_zero():
            raise NoValidDenominator(
                f"det Phi(x_{column} - 1) = 0 for the requested column")
        j = column
    else:
        j = None
        den = None
        for cand in range(u):
            d = det(ev.generator_minus_one(cand))
            if not d.is_zero():
                j, den = cand, d
                break
        if j is None:
            # No usable denominator at all.  If some numerator minor is
            # nonzero the pair is reported unreduced with a flag; with a
            # surjection onto Z this cannot actually happen.
            for cand in range(u):
                num = det(_minor(m, cand, n))
                if not num.is_zero():
                    return TorsionResult(
                        column=cand, numerator=num,
                        denominator=LaurentPoly.zero(rho.field),
                        reduced=None, dimension=n, is_polynomial=False,
                        denominator_usable=False)
            raise NotAcyclic("every numerator determinant vanishes")

    num = det(_minor(m, j, n))
    if num.is_zero():
        raise NotAcyclic("every numerator determinant vanishes")
    reduced = _normalize(num, den)
    # ground truth by exact division, not via any certificate
    return TorsionResult(
        column=j, numerator=num, denominator=den, reduced=reduced,
        dimension=n, is_polynomial=divides(den, num))


def classical_alexander(p: Presentation) -> RationalFunction:
    """The 1-dimensional specialization with the trivial representation.

    The numerator of the reduced quotient is the classical Alexander
    polynomial up to a unit +-t^k.
    """
    from .fields import FieldSpec

    field = FieldSpec(0)
    rho = Representation(field, 1, [((1,),)] * p.rank)
    return reidemeister_torsion(p, rho).reduced


# ---------------------------------------------------------- diagnostics

@dataclass(frozen=True)
class ColumnPair:
    """One verified pair: det M_j * d_j' = sign * t^shift * det M_j' * d_j."""

    left: int
    right: int
    shift: int
    sign: int


@dataclass(frozen=True)
class IndependenceReport:
    usable_columns: tuple
    pairs: tuple


def check_column_independence(p: Presentation, rho: Representation) -> IndependenceReport:
    """Verify that all usable columns give the same torsion up to a unit.

    A failure raises :class:`IndependenceViolated`; it would mean a bug
    in the matrix assembly or in the determinant, never bad user input.
    """
    ev, m = _prepare(p, rho)
    n = rho.dimension
    u = p.rank
    nums = [det(_minor(m, j, n)) for j in range(u)]
    dens = [det(ev.generator_minus_one(j)) for j in range(u)]
    usable = [j for j in range(u) if not dens[j].is_zero()]
    if all(nums[j].is_zero() for j in usable):
        raise NotAcyclic("every numerator determinant vanishes")
    pairs = []
    for a in range(len(usable)):
        for b in range(a + 1, len(usable)):
            j, k = usable[a], usable[b]
            lhs = nums[j] * dens[k]
            rhs = nums[k] * dens[j]
            if lhs.is_zero() or rhs.is_zero():
                raise IndependenceViolated(
                    f"columns {j} and {k}: exactly one side vanished")
            el, pl = lhs.strip()
            er, pr = rhs.strip()
            if pl == pr:
                sign = 1
            elif pl == -pr:
                sign = -1
            else:
                raise IndependenceViolated(
                    f"columns {j} and {k} disagree beyond a unit")
            shift = el - er
            if shift % n:
                raise IndependenceViolated(
                    f"columns {j} and {k}: unit t^{shift} is not a power of t^{n}")
            pairs.append(ColumnPair(j, k, shift, sign))
    return IndependenceReport(tuple(usable), tuple(pairs))


@dataclass(frozen=True)
class ObstructionVerdict:
    """Outcome of the monic test.  ``obstructed`` means NOT fibered."""

    obstructed: bool
    reasons: tuple = ()
    note: str | None = None

    def __bool__(self):
        return self.obstructed


def fibered_obstruction(r: TorsionResult) -> ObstructionVerdict:
    """Necessary condition for fiberedness: all four end coefficients units.

    For an even-dimensional representation the unit group has no sign,
    so the leading and trailing coefficients of the reduced numerator
    and denominator must all be 1; odd dimensions admit -1 as well but
    sit outside the theorem's hypothesis and are flagged.  ``Obstructed``
    is a proof of non-fiberedness; passing proves nothing.
    """
    if r.reduced is None:
        raise ValueError("obstruction needs a reduced torsion value")
    n = r.dimension
    field = r.reduced.numerator.spec
    allowed = {field.one()}
    note = None
    if n % 2 == 1:
        allowed.add(-field.one())
        note = "odd-dimensional representation: outside the even-rank hypothesis"
    reasons = []
    for label, poly in (("numerator", r.reduced.numerator),
                        ("denominator", r.reduced.denominator)):
        body = poly.strip()[1]
        lead = body.leading_coeff()
        trail = body.trailing_coeff()
        if lead not in allowed:
            reasons.append(f"{label} leading coefficient {lead.render()} is not a unit")
        if trail not in allowed:
            reasons.append(f"{label} lowest-degree coefficient {trail.render()} is not a unit")
    return ObstructionVerdict(bool(reasons), tuple(reasons), note)


@dataclass(frozen=True)
class SymmetryReport:
    symmetric: bool
    shift: int | None = None
    sign: int | None = None


def symmetry_check(r: TorsionResult) -> SymmetryReport:
    """Test invariance under t -> 1/t up to a unit +-t^k, reporting the shift."""
    if r.reduced is None:
        raise ValueError("symmetry check needs a reduced torsion value")
    num, den = r.reduced.numerator, r.reduced.denominator
    lhs = num.invert_t() * den
    rhs = num * den.invert_t()
    el, pl = lhs.strip()
    er, pr = rhs.strip()
    if pl == pr:
        return SymmetryReport(True, el - er, 1)
    if pl == -pr:
        return SymmetryReport(True, el - er, -1)
    return SymmetryReport(False)


class CertificateResult(enum.Enum):
    """Outcome of the divisibility certificate for one commutator element."""

    CERTIFIED = "certified"
    NOT_IN_COMMUTATOR = "not-in-commutator"
    EIGENVALUE_ONE = "eigenvalue-one"


def polynomial_certificate(p: Presentation, rho: Representation,
                           gamma: Word) -> CertificateResult:
    """Sufficient condition for the torsion to be a polynomial.

    If gamma lies in the commutator subgroup (zero total t-exponent) and
    1 is not an eigenvalue of rho(gamma), the denominator divides the
    numerator.  CERTIFIED therefore implies ``is_polynomial``.
    """
    ab = abelianization(p)
    if ab.alpha(gamma) != 0:
        return CertificateResult.NOT_IN_COMMUTATOR
    m = rho.of_word(gamma)
    delta = mat_sub(m, mat_identity(rho.field, rho.dimension))
    if mat_det(delta, rho.field).is_zero():
        return CertificateResult.EIGENVALUE_ONE
    return CertificateResult.CERTIFIED
