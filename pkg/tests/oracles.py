"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive: cofactor expansion instead of
elimination, explicit minor enumeration instead of Smith reduction,
orbit enumeration instead of class representatives.  Slow and obviously
correct is the point.
"""

from itertools import combinations
from math import gcd

from twistalex.laurent import LaurentPoly
from twistalex.rep import _tuple_inverse, _tuple_mul, sl2_elements


def cofactor_det(matrix):
    """Determinant of a PolyMatrix by first-row cofactor expansion."""
    n = matrix.rows
    spec = matrix.spec
    if n == 0:
        return LaurentPoly.one(spec)
    if n == 1:
        return matrix[0, 0]
    total = LaurentPoly.zero(spec)
    for j in range(n):
        entry = matrix[0, j]
        if entry.is_zero():
            continue
        sub = [
            [matrix[i, k] for k in range(n) if k != j]
            for i in range(1, n)
        ]
        from twistalex.polymat import PolyMatrix

        minor = cofactor_det(PolyMatrix(spec, sub))
        term = entry * minor
        total = total + (term if j % 2 == 0 else -term)
    return total


def int_minor_gcd(matrix, k):
    """gcd of all k x k minors of an integer matrix (0 when all vanish)."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    best = 0
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            sub = [[matrix[i][j] for j in ci] for i in ri]
            best = gcd(best, int_det(sub))
    return abs(best)


def int_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * int_det(sub)
        total += term if j % 2 == 0 else -term
    return total


def sl2_conjugacy_classes(p):
    """Partition SL(2, F_p) into conjugation orbits; returns frozensets."""
    elements = sl2_elements(p)
    seen = set()
    classes = []
    for m in elements:
        if m in seen:
            continue
        orbit = set()
        for g in elements:
            orbit.add(_tuple_mul(_tuple_mul(g, m, p), _tuple_inverse(g, p), p))
        seen |= orbit
        classes.append(frozenset(orbit))
    return classes
