"""Laurent polynomials in one variable t over an exact field.

Coefficients are stored sparsely as a map from integer exponent to a
nonzero :class:`~twistalex.fields.FieldElement`; the zero polynomial is
the empty map.  That canonical form makes equality structural.  The
images of Fox derivatives under the evaluation homomorphism are sparse,
which is why a degree-indexed map beats a dense list here.

``poly_gcd`` and the exact-division helpers treat a Laurent polynomial
as ``t^e * (ordinary polynomial with nonzero constant term)``; powers of
t are units and are normalized away where the contract asks for it.
"""

from __future__ import annotations

from .errors import BothZero, DivisionByZero, FieldMismatch
from .fields import FieldElement, FieldSpec


class LaurentPoly:
    """A finite sum  sum_k c_k t^k  with exact nonzero coefficients."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs=None):
        self.spec = spec
        canon = {}
        if coeffs:
            for k, c in coeffs.items():
                c = spec.element(c)
                if not c.is_zero():
                    canon[k] = c
        self.coeffs = canon

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, spec) -> "LaurentPoly":
        return cls(spec)

    @classmethod
    def one(cls, spec) -> "LaurentPoly":
        return cls(spec, {0: spec.one()})

    @classmethod
    def t_power(cls, spec, k: int, coeff=1) -> "LaurentPoly":
        return cls(spec, {k: spec.element(coeff)})

    @classmethod
    def from_coeffs(cls, spec, ascending, low=0) -> "LaurentPoly":
        """Build from a coefficient sequence starting at exponent ``low``."""
        return cls(spec, {low + i: c for i, c in enumerate(ascending)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and 0 in self.coeffs and self.coeffs[0].is_one()

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def low_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self.coeffs)

    def leading_coeff(self) -> FieldElement:
        return self.coeffs[self.degree()]

    def trailing_coeff(self) -> FieldElement:
        return self.coeffs[self.low_degree()]

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs.get(k, self.spec.zero())

    def is_unit(self) -> bool:
        """True for c * t^k with c nonzero."""
        return len(self.coeffs) == 1

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if self.spec != other.spec:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return _raw(self.spec, out)

    def __neg__(self):
        return _raw(self.spec, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = LaurentPoly(self.spec, {0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                p = a * b
                s = out.get(k)
                s = p if s is None else s + p
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return _raw(self.spec, out)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def scale(self, c) -> "LaurentPoly":
        c = self.spec.element(c)
        return _raw(self.spec, {k: v * c for k, v in self.coeffs.items()} if not c.is_zero() else {})

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by t^e."""
        if e == 0:
            return self
        return _raw(self.spec, {k + e: c for k, c in self.coeffs.items()})

    def invert_t(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return _raw(self.spec, {-k: c for k, c in self.coeffs.items()})

    def evaluate(self, x) -> FieldElement:
        """Evaluate at a field element (nonzero if negative powers occur)."""
        x = self.spec.element(x)
        total = self.spec.zero()
        for k, c in self.coeffs.items():
            total = total + c * x ** k
        return total

    def strip(self):
        """Split off the t-power content: returns (e, p) with self = t^e * p
        and p having nonzero constant term.  The zero polynomial returns
        (0, 0)."""
        if not self.coeffs:
            return 0, self
        e = self.low_degree()
        return e, self.shift(-e)

    def monic(self) -> "LaurentPoly":
        if self.is_zero():
            return self
        return self.scale(self.leading_coeff().inverse())

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    # -- rendering --------------------------------------------------------------

    def render(self) -> str:
        """Render with terms in strictly decreasing degree.

        Terms look like ``c*t^k`` with ``c`` omitted when it is 1, ``t^0``
        as the bare coefficient and ``t^1`` as ``t``.  Over F_p the
        coefficients print as 0..p-1 and all joins are ``+``; over Q the
        sign is pulled into the join.  Coefficients with an extension part
        are parenthesized.
        """
        if not self.coeffs:
            return "0"
        pieces = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                var = ""
            elif k == 1:
                var = "t"
            else:
                var = f"t^{k}"
            if not c.is_scalar():
                pieces.append((1, f"({c.render()})", var))
            elif self.spec.characteristic:
                v = c.scalar()
                coeff = "" if (v == 1 and var) else str(v)
                pieces.append((1, coeff, var))
            else:
                v = c.scalar()
                sign = 1 if v > 0 else -1
                mag = abs(v)
                from .fields import _scalar_str
                coeff = "" if (mag == 1 and var) else _scalar_str(mag)
                pieces.append((sign, coeff, var))
        out = []
        for i, (sign, coeff, var) in enumerate(pieces):
            body = f"{coeff}*{var}" if coeff and var else (coeff or var)
            if i == 0:
                out.append(body if sign > 0 else f"-{body}")
            else:
                out.append(f" + {body}" if sign > 0 else f" - {body}")
        return "".join(out)

    def __repr__(self):
        return self.render()


def _raw(spec, coeffs) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p.spec = spec
    p.coeffs = coeffs
    return p


# -- ordinary-polynomial division (nonnegative exponents) ------------------

def poly_divmod(a: LaurentPoly, b: LaurentPoly):
    """Quotient and remainder in F[t]; both inputs must have low degree >= 0."""
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if (not a.is_zero() and a.low_degree() < 0) or b.low_degree() < 0:
        raise ValueError("divmod requires ordinary polynomials")
    spec = a.spec
    q = {}
    r = dict(a.coeffs)
    db = b.degree()
    inv_lead = b.leading_coeff().inverse()
    while r:
        dr = max(r)
        if dr < db:
            break
        c = r[dr] * inv_lead
        k = dr - db
        q[k] = c
        for j, bc in b.coeffs.items():
            kk = k + j
            s = r.get(kk, spec.zero()) - c * bc
            if s.is_zero():
                r.pop(kk, None)
            else:
                r[kk] = s
    return _raw(spec, q), _raw(spec, r)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division in the Laurent ring; raises if b does not divide a."""
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if a.is_zero():
        return a
    ea, pa = a.strip()
    eb, pb = b.strip()
    q, r = poly_divmod(pa, pb)
    if not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q.shift(ea - eb)


def divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    """True when b divides a in the Laurent ring (t-powers are units)."""
    if b.is_zero():
        return a.is_zero()
    if a.is_zero():
        return True
    _, pa = a.strip()
    _, pb = b.strip()
    _, r = poly_divmod(pa, pb)
    return r.is_zero()


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Monic gcd with nonzero constant term (t-power content stripped).

    Euclidean algorithm over F[t]; raises :class:`BothZero` when both
    arguments vanish.
    """
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.strip()[1].monic()
    if q.is_zero():
        return p.strip()[1].monic()
    a = p.strip()[1]
    b = q.strip()[1]
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    return a.strip()[1].monic()


class RationalFunction:
    """A quotient of Laurent polynomials with a canonical reduced form."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly):
        if denominator.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if numerator.spec != denominator.spec:
            raise FieldMismatch("numerator and denominator over different fields")
        self.numerator = numerator
        self.denominator = denominator

    def reduce(self) -> "RationalFunction":
        """Equal value, with gcd(num, den) a unit and the denominator a
        monic ordinary polynomial with nonzero constant term."""
        num, den = self.numerator, self.denominator
        if num.is_zero():
            return RationalFunction(num, LaurentPoly.one(den.spec))
        g = poly_gcd(num, den)
        num = exact_div(num, g)
        den = exact_div(den, g)
        e, den = den.strip()
        num = num.shift(-e)
        c = den.leading_coeff()
        if not c.is_one():
            inv = c.inverse()
            num = num.scale(inv)
            den = den.scale(inv)
        return RationalFunction(num, den)

    def is_polynomial(self) -> bool:
        return divides(self.denominator, self.numerator)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self):
        r = self.reduce()
        return hash((r.numerator, r.denominator))

    def render(self) -> str:
        if self.denominator.is_one():
            return self.numerator.render()
        return f"({self.numerator.render()}) / ({self.denominator.render()})"

    def __repr__(self):
        return self.render()
