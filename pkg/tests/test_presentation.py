"""Parser, abelianization, and the monodromy / braid builders."""

import pytest

from twistalex.errors import (
    BadGeneratorIndex,
    ClosureNotKnot,
    DuplicateGenerator,
    NotAbelianizedAutomorphism,
    NotInfiniteCyclic,
    ParseError,
    UnknownGenerator,
)
from twistalex.presentation import (
    Presentation,
    abelianization,
    braid_automorphism,
    parse_presentation,
    parse_word,
    presentation_from_braid,
    presentation_from_monodromy,
)
from twistalex.words import Word


def test_parse_two_generator_knot_presentation():
    text = "gens x y\nrel x^-1 y x y^-1 x^-1 x = y x^-1 y x y^-1 x^-1\n"
    p = parse_presentation(text)
    assert p.generators == ("x", "y")
    assert len(p.relations) == 1
    lhs, rhs = p.relations[0]
    # the lhs collapses by free reduction
    assert lhs == parse_word("x^-1 y x y^-1", p.generators)
    assert rhs == parse_word("y x^-1 y x y^-1 x^-1", p.generators)


def test_parse_free_group_of_rank_one():
    p = parse_presentation("gens x\n")
    assert p.generators == ("x",)
    assert p.relations == ()


def test_parse_relator_form():
    p = parse_presentation("gens a b\nrel a b a^-1 b^-1\n")
    lhs, rhs = p.relations[0]
    assert rhs.is_identity()
    assert lhs == parse_word("a b a^-1 b^-1", p.generators)


def test_parse_exponent_expansion():
    p = parse_presentation("gens a\nrel a^3 = a^-2 a^5\n")
    lhs, rhs = p.relations[0]
    assert lhs == Word.gen(0, 3)
    assert rhs == Word.gen(0, 3)


def test_parse_comments_and_blank_lines():
    text = "# heading\n\ngens x y  # trailing\nrel x = y\n"
    p = parse_presentation(text)
    assert p.generators == ("x", "y")


def test_unknown_generator_positioned():
    with pytest.raises(UnknownGenerator) as e:
        parse_presentation("gens x y\nrel x z\n")
    assert (e.value.line, e.value.column) == (2, 7)


def test_duplicate_generator():
    with pytest.raises(DuplicateGenerator):
        parse_presentation("gens x x\n")


def test_grammar_rejections():
    with pytest.raises(ParseError):
        parse_presentation("")  # missing gens
    with pytest.raises(ParseError):
        parse_presentation("gens x\ngens y\n")  # duplicate gens
    with pytest.raises(ParseError):
        parse_presentation("gens x\nrelation x\n")  # bad directive
    with pytest.raises(ParseError):
        parse_presentation("gens x\nrel\n")  # empty relation
    with pytest.raises(ParseError):
        parse_presentation("gens x\nrel x = \n")  # empty side
    with pytest.raises(ParseError):
        parse_presentation("gens x\nrel x = x = x\n")  # two equals
    with pytest.raises(ParseError):
        parse_presentation("gens x\nrel x^0\n")  # zero exponent
    with pytest.raises(ParseError):
        parse_presentation("gens x\nrel x^a\n")  # non-integer exponent
    with pytest.raises(ParseError):
        parse_presentation("gens 1x\n")  # bad name


def test_positions_are_one_based():
    with pytest.raises(ParseError) as e:
        parse_presentation("gens x\nrel x^0\n")
    assert e.value.line == 2
    assert e.value.column == 5


def test_render_round_trip():
    text = "gens x y\nrel x^-1 y x y^-1 = y x^-1 y x y^-1 x^-1\n"
    p = parse_presentation(text)
    assert parse_presentation(p.render()) == p


# ---------------------------------------------------------- abelianization

def test_abelianization_two_generator_knot():
    p = parse_presentation(
        "gens x y\nrel x^-1 y x y^-1 = y x^-1 y x y^-1 x^-1\n")
    assert abelianization(p).exponents == (1, 1)


def test_abelianization_free_rank_one():
    assert abelianization(parse_presentation("gens x\n")).exponents == (1,)


def test_abelianization_fibered_form():
    p = presentation_from_monodromy(1, [Word.gen(0), Word.gen(1)])
    assert abelianization(p).exponents == (0, 0, 1)


def test_abelianization_rejects_torsion():
    with pytest.raises(NotInfiniteCyclic):
        abelianization(parse_presentation("gens x\nrel x^2 = x^-1 x\n"))


def test_abelianization_rejects_higher_rank():
    with pytest.raises(NotInfiniteCyclic):
        abelianization(parse_presentation("gens x y\n"))


def test_abelianization_consistency_invariant():
    p = parse_presentation(
        "gens x1 x2 x3 x4\n"
        "rel x1 x2 x1^-1 = x4 x2 x4 x2^-1 x4^-1\n"
        "rel x4 x2 x4^-1 = x2^-1 x3 x1 x3^-1 x2 x1 x2^-1 x3 x1^-1 x3^-1 x2\n"
        "rel x1 x3 x1^-1 = x4 x3 x4 x3^-1 x4^-1\n")
    a = abelianization(p)
    for lhs, rhs in p.relations:
        assert a.alpha(lhs) == a.alpha(rhs)


# ------------------------------------------------------------- monodromy

def test_monodromy_trivial():
    p = presentation_from_monodromy(1, [Word.gen(0), Word.gen(1)])
    assert p.generators == ("x", "y", "h")
    assert p.source == "fibered"
    h, x = Word.gen(2), Word.gen(0)
    assert p.relations[0] == (h * x * h.inverse(), x)


def test_monodromy_rejects_singular_exponent_matrix():
    with pytest.raises(NotAbelianizedAutomorphism):
        presentation_from_monodromy(1, [Word.gen(0), Word.gen(0)])


def test_monodromy_rejects_foreign_generators():
    with pytest.raises(BadGeneratorIndex):
        presentation_from_monodromy(1, [Word.gen(0), Word.gen(2)])


# ----------------------------------------------------------------- braids

def test_braid_closure_count():
    with pytest.raises(ClosureNotKnot):
        presentation_from_braid([1, 1], 2)  # two-component closure


def test_braid_bad_letter():
    with pytest.raises(BadGeneratorIndex):
        presentation_from_braid([2], 2)
    with pytest.raises(BadGeneratorIndex):
        presentation_from_braid([0], 3)


def test_braid_trefoil_shape():
    p = presentation_from_braid([1, 1, 1], 2)
    assert p.generators == ("x1", "x2")
    assert len(p.relations) == 1
    assert p.source == "braid"


def test_braid_relations_of_the_artin_action():
    # sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}
    for s in range(3, 7):
        for i in range(1, s - 1):
            a = braid_automorphism([i, i + 1, i], s)
            b = braid_automorphism([i + 1, i, i + 1], s)
            assert a == b


def test_braid_generator_inverse_cancels():
    for s in (2, 3, 4):
        for i in range(1, s):
            identity = [Word.gen(k) for k in range(s)]
            assert braid_automorphism([i, -i], s) == identity
            assert braid_automorphism([-i, i], s) == identity
