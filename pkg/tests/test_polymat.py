"""Determinants of Laurent-polynomial matrices against a cofactor oracle."""

import random

import pytest

from twistalex.errors import NotSquare
from twistalex.fields import FieldSpec
from twistalex.laurent import LaurentPoly
from twistalex.polymat import PolyMatrix, det

from .oracles import cofactor_det

F5 = FieldSpec(5)
Q = FieldSpec(0)
QW = FieldSpec(0, (1, 1, 1))


def poly(spec, ascending, low=0):
    return LaurentPoly.from_coeffs(spec, [spec.element(c) for c in ascending], low)


def rand_matrix(spec, rng, n, span=(-2, 3)):
    def entry():
        coeffs = {}
        for _ in range(rng.randint(0, 3)):
            coeffs[rng.randint(*span)] = spec.element(rng.randint(-4, 4))
        return LaurentPoly(spec, coeffs)

    return PolyMatrix(spec, [[entry() for _ in range(n)] for _ in range(n)])


def test_one_by_one():
    p = poly(Q, [3, 0, 1], low=-1)
    assert det(PolyMatrix(Q, [[p]])) == p


def test_empty_matrix_det_is_one():
    assert det(PolyMatrix.zero(Q, 0, 0)) == LaurentPoly.one(Q)


def test_not_square():
    with pytest.raises(NotSquare):
        det(PolyMatrix.zero(Q, 2, 3))


def test_twisted_2x2_matrix_over_extension_field():
    # the evaluated 2x2 block matrix of the two-generator fibered knot:
    # entries carry w with w^2 + w + 1 = 0, but the determinant is rational
    w = QW.gen()
    one = QW.one()
    m = PolyMatrix(QW, [
        [LaurentPoly(QW, {1: -(w + one), 0: w + QW.element(2), -1: -one}),
         LaurentPoly(QW, {1: one, 0: w - QW.element(2), -1: one})],
        [LaurentPoly(QW, {1: w - one, 0: -w + one}),
         LaurentPoly(QW, {1: -(w + one), 0: QW.element(3), -1: -one})],
    ])
    expected = poly(QW, [1, -6, 10, -6, 1], low=-2)
    assert det(m) == expected
    # t^-2 (t-1)^2 (t^2-4t+1) is the factored form of the same value
    assert expected == (poly(QW, [1, -2, 1]) * poly(QW, [1, -4, 1])).shift(-2)


def test_random_4x4_matches_cofactor_oracle():
    rng = random.Random(2024)
    for _ in range(10):
        m = rand_matrix(F5, rng, 4)
        assert det(m) == cofactor_det(m)
    for _ in range(5):
        m = rand_matrix(Q, rng, 3)
        assert det(m) == cofactor_det(m)


def test_det_multiplicative():
    rng = random.Random(11)
    for _ in range(8):
        a = rand_matrix(F5, rng, 3)
        b = rand_matrix(F5, rng, 3)
        assert det(a * b) == det(a) * det(b)


def test_det_zero_row():
    rng = random.Random(5)
    m = rand_matrix(Q, rng, 3)
    rows = [list(r) for r in m.entries]
    rows[1] = [LaurentPoly.zero(Q)] * 3
    assert det(PolyMatrix(Q, rows)).is_zero()


def test_det_needs_pivoting():
    z = LaurentPoly.zero(Q)
    one = LaurentPoly.one(Q)
    t = poly(Q, [0, 1])
    m = PolyMatrix(Q, [[z, one, z], [t, z, z], [z, z, t]])
    assert det(m) == -(t * t)


def test_identity_and_delete_columns():
    i3 = PolyMatrix.identity(Q, 3)
    assert det(i3).is_one()
    dropped = i3.delete_columns([1])
    assert dropped.cols == 2 and dropped.rows == 3
