"""Field arithmetic: prime fields, Q, and simple extensions."""

from fractions import Fraction

import pytest

from twistalex.errors import DivisionByZero, FieldMismatch, NotIrreducible
from twistalex.fields import FieldSpec

F5 = FieldSpec(5)
F7 = FieldSpec(7)
Q = FieldSpec(0)
# Q(w) with w^2 + w + 1 = 0, i.e. modulus coefficients 1 + w + w^2
QW = FieldSpec(0, (1, 1, 1))
F25 = FieldSpec(5, (2, 0, 1))  # w^2 + 2 is irreducible over F_5


def test_division_in_f5():
    two, four = F5.element(2), F5.element(4)
    assert two / four == F5.element(3)
    assert four * F5.element(3) == two


def test_omega_square_is_minus_omega_minus_one():
    w = QW.gen()
    assert w * w == QW.element([-1, -1])
    assert w * w + w + QW.one() == QW.zero()


def test_additive_identity():
    for spec in (F5, Q, QW, F25):
        a = spec.element(3)
        assert a + spec.zero() == a


def test_rational_arithmetic_uses_fractions():
    a = Q.element(Fraction(3, 2))
    b = Q.element(Fraction(1, 3))
    assert (a * b).scalar() == Fraction(1, 2)
    assert (a / b).scalar() == Fraction(9, 2)


@pytest.mark.parametrize("spec", [FieldSpec(2), FieldSpec(3), F5, F7])
def test_multiplicative_inverse_exhaustive(spec):
    for a in spec.elements():
        if a.is_zero():
            continue
        assert a * a.inverse() == spec.one()
        assert a / a == spec.one()


def test_extension_field_inverses_exhaustive():
    for a in F25.elements():
        if a.is_zero():
            continue
        assert a * a.inverse() == F25.one()


def test_extension_inverse_over_q():
    w = QW.gen()
    x = w + QW.element(2)
    assert x * x.inverse() == QW.one()


def test_field_axioms_sampled():
    w = F25.gen()
    samples = [F25.element(k) + w * F25.element(j) for k in range(3) for j in range(3)]
    for a in samples:
        for b in samples:
            assert a + b == b + a
            assert a * b == b * a
            for c in samples:
                assert (a + b) + c == a + (b + c)
                assert a * (b + c) == a * b + a * c


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        F5.element(1) / F5.zero()
    with pytest.raises(DivisionByZero):
        QW.zero().inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        F5.element(1) + F7.element(1)


def test_characteristic_must_be_prime_or_zero():
    with pytest.raises(ValueError):
        FieldSpec(6)


def test_reducible_modulus_rejected_over_fp():
    # w^2 - 1 has roots +-1
    with pytest.raises(NotIrreducible):
        FieldSpec(5, (-1, 0, 1))


def test_modulus_must_be_monic_of_degree_two():
    with pytest.raises(ValueError):
        FieldSpec(0, (1, 1, 2))
    with pytest.raises(ValueError):
        FieldSpec(0, (1, 1))


def test_structural_equality_of_specs():
    assert FieldSpec(5) == FieldSpec(5)
    assert FieldSpec(0, (1, 1, 1)) == FieldSpec(0, (1, 1, 1))
    assert FieldSpec(5) != FieldSpec(7)
    assert FieldSpec(0, (1, 1, 1), "w") != FieldSpec(0, (1, 1, 1), "z")


def test_negative_powers():
    a = F7.element(3)
    assert a ** -2 == (a * a).inverse()


def test_render():
    assert F5.element(4).render() == "4"
    assert Q.element(Fraction(-3, 2)).render() == "-3/2"
    w = QW.gen()
    assert (w + QW.one()).render() == "w + 1"
    assert (-w - QW.one()).render() == "-w - 1"
    assert (F25.gen() * F25.element(3) + F25.element(2)).render() == "3*w + 2"
