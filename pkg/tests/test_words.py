import pytest

from selfsim.nilpotent import (
    ExpressionSyntaxError,
    Word,
    collect,
    evaluate,
    format_element,
    generator,
    get_presentation,
    identity,
    parse_word,
    random_element,
)


def test_collect_g2_g1_in_heisenberg():
    p = get_presentation(2, 2)
    assert evaluate(p, "g2 g1").exponents == (1, 1, 1)


def test_cancelling_word_is_identity():
    p = get_presentation(3, 3)
    assert evaluate(p, "g1 g1^{-1}") == identity(p)
    assert evaluate(p, "g2*g3^-2*g3^2*g2^(-1)") == identity(p)


@pytest.mark.parametrize("text", ["e", "1", "  e  "])
def test_identity_spellings(text):
    p = get_presentation(2, 2)
    assert evaluate(p, text) == identity(p)


def test_group_and_commutator_letters():
    p = get_presentation(2, 3)
    g1, g2 = generator(p, 1), generator(p, 2)
    assert evaluate(p, "(g1 g2)^3") == (g1 * g2) ** 3
    assert evaluate(p, "[g1 g2, g2^-1]^2") == (g1 * g2).commutator(g2.inverse()) ** 2
    assert evaluate(p, "[[g2,g1],g1]^-1") == g2.commutator(g1).commutator(g1).inverse()


def test_word_from_pairs_drops_zero_exponents():
    p = get_presentation(2, 2)
    word = Word.from_pairs([(1, 2), (2, 0), (1, -1)])
    assert len(word.letters) == 2
    assert collect(p, word) == generator(p, 1)


def test_normal_form_text_round_trips(rng):
    p = get_presentation(3, 3)
    for _ in range(30):
        a = random_element(p, rng)
        assert evaluate(p, format_element(a)) == a


def test_format_element_examples():
    p = get_presentation(2, 2)
    assert format_element(identity(p)) == "e"
    assert format_element(evaluate(p, "g2 g1")) == "g1*g2*[g2,g1]"
    assert format_element(evaluate(p, "[g1,g2]^2 g1^-1")) == "g1^-1*[g2,g1]^-2"


@pytest.mark.parametrize("text", ["", "g1 +", "[g1 g2]", "g1^", "h1", "(g1", "g1^x", "2"])
def test_syntax_errors(text):
    p = get_presentation(2, 2)
    with pytest.raises(ExpressionSyntaxError):
        evaluate(p, text)


def test_generator_out_of_range():
    p = get_presentation(3, 2)
    with pytest.raises(ExpressionSyntaxError, match="out of range"):
        evaluate(p, "g4")


def test_parse_word_structure():
    word = parse_word("g1^2 [g2,g1]")
    assert word.letters[0].index == 1
    assert word.letters[0].exponent == 2
    assert word.letters[1].exponent == 1
