"""Exact scalar arithmetic in the coefficient fields.

Supported fields are the rationals, prime fields F_p, and simple
extensions of either kind given by a monic modulus, e.g. Q(w) with
w^2 + w + 1 = 0 or F_p(w).  Elements are stored as canonical residues:
integers 0..p-1 over F_p, reduced ``Fraction`` values over Q, and
residue polynomials of degree < deg(modulus) for extensions.  Equality
is therefore a plain structural comparison.

All values are immutable; operations return new elements.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, NotIrreducible


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """A coefficient field: characteristic plus optional extension modulus.

    ``characteristic`` is 0 (rationals) or a prime p.  ``modulus``, when
    given, is the ascending coefficient sequence of a monic polynomial of
    degree >= 2 in the named ``generator``; the field is then the quotient
    by that modulus.  Irreducibility over F_p is checked by exhaustive
    root search; over Q the declaration is taken on trust.
    """

    __slots__ = ("characteristic", "modulus", "generator", "degree", "_key")

    def __init__(self, characteristic, modulus=None, generator="w"):
        if characteristic != 0 and not is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic
        self.generator = generator
        if modulus is None:
            self.modulus = None
            self.degree = 1
        else:
            coeffs = tuple(self._canon_scalar(c) for c in modulus)
            while coeffs and coeffs[-1] == self._szero():
                coeffs = coeffs[:-1]
            if len(coeffs) < 3:
                raise ValueError("extension modulus must have degree >= 2")
            if coeffs[-1] != self._sone():
                raise ValueError("extension modulus must be monic")
            if characteristic:
                for a in range(characteristic):
                    acc = 0
                    for c in reversed(coeffs):
                        acc = (acc * a + c) % characteristic
                    if acc == 0:
                        raise NotIrreducible(
                            f"modulus has root {a} over F_{characteristic}")
            self.modulus = coeffs
            self.degree = len(coeffs) - 1
        self._key = (self.characteristic, self.modulus, self.generator)

    # -- base-field scalars -------------------------------------------

    def _canon_scalar(self, x):
        if isinstance(x, FieldElement):
            raise TypeError("expected a base scalar, not a field element")
        if self.characteristic:
            return int(x) % self.characteristic
        return Fraction(x)

    def _szero(self):
        return 0 if self.characteristic else Fraction(0)

    def _sone(self):
        return 1 if self.characteristic else Fraction(1)

    def _sinv(self, x):
        if x == self._szero():
            raise DivisionByZero("scalar division by zero")
        if self.characteristic:
            return pow(x, -1, self.characteristic)
        return Fraction(1) / x

    # -- element constructors -----------------------------------------

    def element(self, value) -> FieldElement:
        """Coerce an int, Fraction, residue sequence or element into the field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree:
                raise ValueError("residue longer than extension degree")
            residue = [self._canon_scalar(c) for c in value]
        else:
            residue = [self._canon_scalar(value)]
        residue += [self._szero()] * (self.degree - len(residue))
        return FieldElement(self, tuple(residue))

    def zero(self) -> FieldElement:
        return self.element(0)

    def one(self) -> FieldElement:
        return self.element(1)

    def gen(self) -> FieldElement:
        """The extension generator as a field element."""
        if self.modulus is None:
            raise ValueError("prime field has no extension generator")
        return self.element([0, 1])

    def elements(self):
        """Iterate over the whole field (finite characteristic only)."""
        if not self.characteristic:
            raise ValueError("cannot enumerate a characteristic-0 field")
        p = self.characteristic

        def rec(prefix):
            if len(prefix) == self.degree:
                yield self.element(list(prefix))
                return
            for c in range(p):
                yield from rec(prefix + (c,))

        yield from rec(())

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        base = "Q" if self.characteristic == 0 else f"F_{self.characteristic}"
        if self.modulus is None:
            return f"FieldSpec({base})"
        return f"FieldSpec({base}({self.generator}))"


class FieldElement:
    """An element of a :class:`FieldSpec`, in canonical residue form."""

    __slots__ = ("spec", "residue")

    def __init__(self, spec: FieldSpec, residue: tuple):
        self.spec = spec
        self.residue = residue

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == self.spec._szero() for c in self.residue)

    def is_one(self) -> bool:
        return self == self.spec.one()

    def is_scalar(self) -> bool:
        """True when the element lies in the base field (no generator part)."""
        z = self.spec._szero()
        return all(c == z for c in self.residue[1:])

    def scalar(self):
        """The base-field value of a scalar element."""
        if not self.is_scalar():
            raise ValueError("element has a nonzero extension part")
        return self.residue[0]

    # -- coercion helpers ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(
                    f"operands from different fields: {self.spec!r} vs {other.spec!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.element(other)
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        spec = self.spec
        if spec.characteristic:
            p = spec.characteristic
            res = tuple((a + b) % p for a, b in zip(self.residue, other.residue))
        else:
            res = tuple(a + b for a, b in zip(self.residue, other.residue))
        return FieldElement(spec, res)

    __radd__ = __add__

    def __neg__(self):
        spec = self.spec
        if spec.characteristic:
            p = spec.characteristic
            return FieldElement(spec, tuple((-a) % p for a in self.residue))
        return FieldElement(spec, tuple(-a for a in self.residue))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        spec = self.spec
        d = spec.degree
        if d == 1:
            v = self.residue[0] * other.residue[0]
            if spec.characteristic:
                v %= spec.characteristic
            return FieldElement(spec, (v,))
        conv = [spec._szero()] * (2 * d - 1)
        for i, a in enumerate(self.residue):
            if a == spec._szero():
                continue
            for j, b in enumerate(other.residue):
                conv[i + j] += a * b
        # reduce modulo the monic modulus, highest degree first
        mod = spec.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if spec.characteristic:
                c %= spec.characteristic
            if c == spec._szero():
                continue
            for i in range(d):
                conv[k - d + i] -= c * mod[i]
            conv[k] = spec._szero()
        if spec.characteristic:
            p = spec.characteristic
            res = tuple(v % p for v in conv[:d])
        else:
            res = tuple(conv[:d])
        return FieldElement(spec, res)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        spec = self.spec
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if spec.degree == 1:
            return FieldElement(spec, (spec._sinv(self.residue[0]),))
        # extended Euclid in (base field)[x] against the modulus
        r0, s0 = list(spec.modulus), [spec._szero()]
        r1, s1 = list(self.residue), [spec._sone()]
        _trim(r1, spec)
        while True:
            if len(r1) == 1:
                break
            q, r = _poly_divmod(r0, r1, spec)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, spec), spec)
            _trim(r1, spec)
        c = spec._sinv(r1[0])
        inv = [(x * c) for x in s1]
        if spec.characteristic:
            inv = [v % spec.characteristic for v in inv]
        inv += [spec._szero()] * (spec.degree - len(inv))
        return FieldElement(spec, tuple(inv[:spec.degree]))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero field element")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.spec.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.residue == other.residue

    def __hash__(self):
        return hash((self.spec._key, self.residue))

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: a base scalar, or a polynomial in the generator.

        Over F_p scalars print as 0..p-1 joined with ``+``; over Q signs
        are pulled out, e.g. ``-w - 1`` or ``3/2``.
        """
        spec = self.spec
        if self.is_scalar():
            return _scalar_str(self.residue[0])
        terms = []
        for k in range(spec.degree - 1, -1, -1):
            c = self.residue[k]
            if c == spec._szero():
                continue
            if k == 0:
                var = ""
            elif k == 1:
                var = spec.generator
            else:
                var = f"{spec.generator}^{k}"
            terms.append((c, var))
        if spec.characteristic:
            parts = []
            for c, var in terms:
                if not var:
                    parts.append(_scalar_str(c))
                elif c == 1:
                    parts.append(var)
                else:
                    parts.append(f"{_scalar_str(c)}*{var}")
            return " + ".join(parts)
        out = []
        for i, (c, var) in enumerate(terms):
            mag = abs(c)
            if not var:
                piece = _scalar_str(mag)
            elif mag == 1:
                piece = var
            else:
                piece = f"{_scalar_str(mag)}*{var}"
            if i == 0:
                out.append(piece if c > 0 else f"-{piece}")
            else:
                out.append(f" + {piece}" if c > 0 else f" - {piece}")
        return "".join(out)

    def __repr__(self):
        return self.render()


def _scalar_str(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


# -- small polynomial helpers over base scalars (ascending coefficients) --

def _trim(a, spec):
    z = spec._szero()
    while len(a) > 1 and a[-1] == z:
        a.pop()


def _poly_divmod(a, b, spec):
    a = list(a)
    _trim(a, spec)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = spec._sinv(b[-1])
    q = [spec._szero()] * max(da - db + 1, 1)
    while da >= db and not (da == 0 and a[0] == spec._szero()):
        c = a[da] * inv_lead
        if spec.characteristic:
            c %= spec.characteristic
        if c != spec._szero():
            q[da - db] = c
            for i in range(db + 1):
                a[da - db + i] -= c * b[i]
                if spec.characteristic:
                    a[da - db + i] %= spec.characteristic
        da -= 1
    _trim(a, spec)
    return q, a


def _poly_mul(a, b, spec):
    out = [spec._szero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == spec._szero():
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if spec.characteristic:
        out = [v % spec.characteristic for v in out]
    return out


def _poly_sub(a, b, spec):
    n = max(len(a), len(b))
    a = list(a) + [spec._szero()] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    if spec.characteristic:
        a = [v % spec.characteristic for v in a]
    return a
