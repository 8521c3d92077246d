"""Dense matrices over the Laurent polynomial ring, with an exact determinant.

The determinant first pulls the smallest power of t out of every row so
all entries become ordinary polynomials, then runs fraction-free
(Bareiss) elimination, whose divisions are exact in F[t], and finally
restores the collected t-power.  That keeps every intermediate value a
polynomial instead of a rational function.
"""

from __future__ import annotations

from .errors import FieldMismatch, NotSquare
from .laurent import LaurentPoly, poly_divmod


class PolyMatrix:
    """A rows x cols grid of :class:`LaurentPoly` over one field."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec, entries, cols=None):
        self.spec = spec
        self.entries = tuple(tuple(e for e in row) for row in entries)
        self.rows = len(self.entries)
        if self.rows:
            self.cols = len(self.entries[0])
        else:
            self.cols = 0 if cols is None else cols
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")
            for e in row:
                if e.spec != spec:
                    raise FieldMismatch("entry over a different field")

    @classmethod
    def zero(cls, spec, rows, cols) -> "PolyMatrix":
        z = LaurentPoly.zero(spec)
        return cls(spec, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, spec, n) -> "PolyMatrix":
        z = LaurentPoly.zero(spec)
        one = LaurentPoly.one(spec)
        return cls(spec, [[one if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.spec == other.spec and self.entries == other.entries

    def __hash__(self):
        return hash((self.spec, self.entries))

    def __add__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return PolyMatrix(self.spec, [
            [a + b for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return PolyMatrix(self.spec, [
            [a - b for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)])

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return PolyMatrix(self.spec, [[e * other for e in row] for row in self.entries])
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        z = LaurentPoly.zero(self.spec)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.spec, out)

    def delete_columns(self, cols) -> "PolyMatrix":
        drop = set(cols)
        kept = [j for j in range(self.cols) if j not in drop]
        return PolyMatrix(self.spec, [[row[j] for j in kept] for row in self.entries],
                          cols=len(kept))

    def __repr__(self):
        body = "; ".join(", ".join(e.render() for e in row) for row in self.entries)
        return f"PolyMatrix({self.rows}x{self.cols}: {body})"


def det(m: PolyMatrix) -> LaurentPoly:
    """Exact determinant of a square Laurent-polynomial matrix.

    The empty 0x0 matrix has determinant 1.
    """
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    spec = m.spec
    n = m.rows
    if n == 0:
        return LaurentPoly.one(spec)
    # Pull t^e_i out of row i so every entry is an ordinary polynomial.
    shift = 0
    a = []
    for row in m.entries:
        lows = [e.low_degree() for e in row if not e.is_zero()]
        if not lows:
            return LaurentPoly.zero(spec)
        e = min(lows)
        shift += e
        a.append([x.shift(-e) for x in row])

    sign = 1
    prev = LaurentPoly.one(spec)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPoly.zero(spec)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                q, r = poly_divmod(num, prev)
                if not r.is_zero():
                    raise ArithmeticError("Bareiss division was not exact")
                a[i][j] = q
            a[i][k] = LaurentPoly.zero(spec)
        prev = pivot
    result = a[n - 1][n - 1].shift(shift)
    return -result if sign < 0 else result
