"""Laurent polynomial ring, gcd, rational functions, and rendering."""

import random

import pytest

from twistalex.errors import BothZero
from twistalex.fields import FieldSpec
from twistalex.laurent import (
    LaurentPoly,
    RationalFunction,
    divides,
    exact_div,
    poly_divmod,
    poly_gcd,
)

F5 = FieldSpec(5)
Q = FieldSpec(0)


def rand_poly(spec, rng, terms=4, span=(-3, 5)):
    coeffs = {}
    for _ in range(rng.randint(0, terms)):
        k = rng.randint(*span)
        c = rng.randint(-4, 4)
        coeffs[k] = coeffs.get(k, 0) + c
    return LaurentPoly(spec, {k: spec.element(c) for k, c in coeffs.items()})


def poly(spec, ascending, low=0):
    return LaurentPoly.from_coeffs(spec, [spec.element(c) for c in ascending], low)


def test_canonical_sparse_form():
    p = LaurentPoly(Q, {0: 1, 2: 0, -1: 3})
    assert set(p.coeffs) == {0, -1}
    assert LaurentPoly(Q).is_zero()


def test_ring_axioms_random():
    rng = random.Random(42)
    for spec in (Q, F5):
        for _ in range(60):
            p, q, r = (rand_poly(spec, rng) for _ in range(3))
            assert (p + q) + r == p + (q + r)
            assert p * (q + r) == p * q + p * r
            assert p * q == q * p
            assert p + q == q + p


def test_divmod_and_exact_division():
    a = poly(Q, [1, -6, 10, -6, 1])  # has factor (t-1)^2
    b = poly(Q, [1, -2, 1])
    q, r = poly_divmod(a, b)
    assert r.is_zero()
    assert q == poly(Q, [1, -4, 1])
    assert exact_div(a.shift(-2), b) == poly(Q, [1, -4, 1], low=-2)
    assert divides(b, a)
    assert not divides(poly(Q, [1, 1]), a)


def test_gcd_with_zero_normalizes():
    p = poly(Q, [2, 2], low=3)  # 2t^4 + 2t^3
    g = poly_gcd(p, LaurentPoly.zero(Q))
    assert g == poly(Q, [1, 1])
    with pytest.raises(BothZero):
        poly_gcd(LaurentPoly.zero(Q), LaurentPoly.zero(Q))


def test_gcd_of_shared_square_factor():
    # gcd((t-1)^2 (t^2-4t+1), (t-1)^2) = (t-1)^2
    sq = poly(Q, [1, -2, 1])
    other = poly(Q, [1, -4, 1])
    assert poly_gcd(sq * other, sq) == sq


def test_gcd_recovers_planted_factor():
    rng = random.Random(7)
    for spec in (Q, F5):
        for _ in range(25):
            g = rand_poly(spec, rng)
            if g.is_zero() or len(g.coeffs) < 2:
                continue
            p = rand_poly(spec, rng)
            q = rand_poly(spec, rng)
            if p.is_zero() or q.is_zero():
                continue
            got = poly_gcd(p * g, q * g)
            expected = poly_gcd(p, q) * g.strip()[1].monic()
            assert got == expected.strip()[1].monic()


def test_gcd_is_monic_with_nonzero_constant_term():
    g = poly_gcd(poly(F5, [2, 4], low=2), poly(F5, [1, 2], low=-1))
    assert g.leading_coeff().is_one()
    assert not g.coeff(0).is_zero()


def test_rational_function_reduce():
    num = poly(Q, [1, -4, 1]) * poly(Q, [1, -2, 1]).shift(-2)
    den = poly(Q, [1, -2, 1])
    rf = RationalFunction(num, den).reduce()
    assert rf.denominator.is_one()
    assert rf.numerator == poly(Q, [1, -4, 1], low=-2)
    # reduce preserves the value exactly
    assert rf == RationalFunction(num, den)


def test_rational_function_denominator_monic():
    rf = RationalFunction(poly(F5, [1, 1]), poly(F5, [2, 3])).reduce()
    assert rf.denominator.leading_coeff().is_one()
    assert not rf.denominator.coeff(0).is_zero()


def test_invert_t_and_evaluate():
    p = poly(Q, [1, -4, 1])
    assert p.invert_t() == poly(Q, [1, -4, 1], low=-2)
    assert p.evaluate(1).scalar() == -2


def test_render_char_zero():
    assert poly(Q, [1, -4, 1]).render() == "t^2 - 4*t + 1"
    assert poly(Q, [1, -6, 10, -6, 1], low=-2).render() == "t^2 - 6*t + 10 - 6*t^-1 + t^-2"
    assert poly(Q, [-1, 0, -1]).render() == "-t^2 - 1"
    assert poly(Q, [0]).render() == "0"
    assert poly(Q, [5]).render() == "5"
    assert poly(Q, [0, 1]).render() == "t"
    assert poly(Q, [0, -1]).render() == "-t"


def test_render_finite_field_has_no_minus_signs():
    p = LaurentPoly(F5, {6: F5.element(4), 4: F5.element(2), 3: F5.element(1),
                         2: F5.element(2), 0: F5.element(4)})
    assert p.render() == "4*t^6 + 2*t^4 + t^3 + 2*t^2 + 4"


def test_render_extension_coefficients_parenthesized():
    qw = FieldSpec(0, (1, 1, 1))
    w = qw.gen()
    p = LaurentPoly(qw, {1: -(w + qw.one()), 0: w + qw.element(2)})
    assert p.render() == "(-w - 1)*t + (w + 2)"
