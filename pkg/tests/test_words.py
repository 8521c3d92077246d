"""Free reduction, word operations, and the integral group ring."""

import pytest
from hypothesis import given, strategies as st

from twistalex.errors import BadGeneratorIndex
from twistalex.words import GroupRingElement, Word

letters = st.lists(
    st.tuples(st.integers(min_value=0, max_value=4), st.sampled_from([1, -1])),
    max_size=24)
words = letters.map(Word)


def W(*pairs):
    return Word(tuple(pairs))


def test_free_reduction_basics():
    assert (Word.gen(0) * Word.gen(0, -1)).is_identity()
    assert W((0, 1), (0, -1)) == Word.identity()
    assert W((0, 1), (1, 1), (1, -1), (0, 1)).letters == ((0, 1), (0, 1))


def test_inverse_reverses_and_flips():
    xy = Word.gen(0) * Word.gen(1)
    assert xy.inverse().letters == ((1, -1), (0, -1))


def test_gen_with_exponent():
    assert Word.gen(2, -3).letters == ((2, -1),) * 3
    assert Word.gen(1, 0).is_identity()


def test_negative_index_rejected():
    with pytest.raises(BadGeneratorIndex):
        Word.gen(-1)


@given(words)
def test_reduction_idempotent(w):
    assert Word(w.letters) == w


@given(words)
def test_word_times_inverse_is_identity(w):
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()


@given(words, words)
def test_substitution_is_homomorphism(w1, w2):
    images = [Word.gen(1) * Word.gen(0), Word.gen(2), Word.gen(0, -1),
              Word.gen(3) * Word.gen(3), Word.gen(4)]
    assert (w1 * w2).substitute(images) == w1.substitute(images) * w2.substitute(images)


def test_substitution_preserves_identity():
    # substituting x -> ab into x x^-1 collapses to the identity
    images = [Word.gen(1) * Word.gen(2), Word.gen(1), Word.gen(2)]
    w = Word.gen(0) * Word.gen(0, -1)
    assert w.substitute(images).is_identity()


def test_exponent_sum():
    w = W((0, 1), (1, 1), (0, 1), (1, -1), (0, -1))
    assert w.exponent_sum(0) == 1
    assert w.exponent_sum(1) == 0


# ---------------------------------------------------------- group ring

def test_group_ring_basic_products():
    x = Word.gen(0)
    one = GroupRingElement.one()
    xm1 = GroupRingElement.from_word(x) - one
    xinv = GroupRingElement.from_word(x.inverse())
    # (x - 1) x^-1 = 1 - x^-1
    assert xm1 * xinv == one - xinv


def test_group_ring_multiplicative_identity():
    a = GroupRingElement({W((0, 1)): 2, W((1, -1), (0, 1)): -3})
    assert a * GroupRingElement.one() == a
    assert GroupRingElement.one() * a == a


def test_group_ring_expansion_matches_hand_computation():
    y = Word.gen(1)
    xinv = Word.gen(0, -1)
    lhs = (GroupRingElement.from_word(y) * GroupRingElement.from_word(xinv * y)
           - GroupRingElement.from_word(y) * GroupRingElement.from_word(xinv))
    expected = GroupRingElement({y * xinv * y: 1, y * xinv: -1})
    assert lhs == expected


@given(st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4),
       st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4),
       st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4))
def test_group_ring_associative_and_distributive(ta, tb, tc):
    a = GroupRingElement(dict(ta))
    b = GroupRingElement(dict(tb))
    c = GroupRingElement(dict(tc))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_scalar_multiplication():
    a = GroupRingElement({W((0, 1)): 2})
    assert a * 3 == GroupRingElement({W((0, 1)): 6})
    assert 0 * a == GroupRingElement.zero()


def test_render():
    names = ("x", "y")
    e = GroupRingElement({Word.identity(): 1, W((0, -1)): -1})
    assert e.render(names) == "1 - x^-1"
