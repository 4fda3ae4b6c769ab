import itertools

import pytest

from selfsim.nilpotent import evaluate, generator, get_presentation, identity, random_element
from selfsim.selfsimilar import (
    LetterRangeError,
    PortraitCapExceededError,
    SelfSimilarRep,
    act,
    cyclic_endomorphism,
    decompose,
    faithfulness_witness,
    format_cycles,
    portrait,
)
from selfsim.selfsimilar.example import EXPECTED_RECURSION, bracket_transversal, format_greek, parse_greek


def _random_word_element(p, rng, length=4):
    g = identity(p)
    for _ in range(rng.randint(1, length)):
        g = g * generator(p, rng.randint(1, p.rank)) ** rng.choice((-1, 1))
    return g


def test_bracket_transversal_order(n32):
    texts = ["e", "g1", "[g1,g2]", "[g1,g3]", "g1 [g1,g2]", "g1 [g1,g3]", "[g1,g2][g1,g3]", "g1[g1,g2][g1,g3]"]
    assert bracket_transversal(n32) == [evaluate(n32, text) for text in texts]
    assert evaluate(n32, "[g1,g2]").exponents == (0, 0, 0, -1, 0, 0)


@pytest.mark.parametrize("position", [1, 2, 3])
def test_reference_recursion(example, position):
    expected = EXPECTED_RECURSION[position - 1]
    decomposition = decompose(example, generator(example.presentation, position))
    assert decomposition.cycles == expected.cycles
    assert decomposition.states == tuple(parse_greek(example.presentation, s) for s in expected.states)
    assert tuple(format_greek(s) for s in decomposition.states) == expected.states


def test_known_discrepancy_is_the_only_one():
    assert [e.discrepancies for e in EXPECTED_RECURSION] == [(), (8,), ()]


def test_states_abelianize_consistently(example):
    # every state of g_{i+1} abelianizes to g_i
    p = example.presentation
    for position, expected in ((2, (1, 0, 0)), (3, (0, 1, 0))):
        for state in decompose(example, generator(p, position)).states:
            assert state.abelianization() == expected


def test_act_reference_word(example):
    g1 = generator(example.presentation, 1)
    assert act(example, g1, [2, 1]) == (1, 1)
    assert example.element(g1)([2, 1]) == (1, 1)
    assert act(example, identity(example.presentation), [3, 4, 5]) == (3, 4, 5)


def test_act_rejects_out_of_range_letters(example):
    g1 = generator(example.presentation, 1)
    with pytest.raises(LetterRangeError):
        act(example, g1, [9])
    with pytest.raises(LetterRangeError):
        act(example, g1, [0])


def test_portrait_depth_one(example):
    tree = portrait(example, generator(example.presentation, 1), 1)
    assert tree.cycles == "(12)(35)(46)(78)"
    gamma = (1, 6, 3, 4, 8, 2, 7, 5)
    identity_perm = tuple(range(1, 9))
    assert [child.perm for child in tree.children] == [
        identity_perm, gamma, identity_perm, identity_perm, gamma, gamma, identity_perm, gamma
    ]
    assert tree.node_count() == 9


def test_portrait_cap(example):
    with pytest.raises(PortraitCapExceededError):
        portrait(example, generator(example.presentation, 1), 3, cap=100)


def test_action_is_a_right_action(example, rng):
    p = example.presentation
    for _ in range(1000):
        g, h = _random_word_element(p, rng), _random_word_element(p, rng)
        word = [rng.randint(1, 8) for _ in range(rng.randint(1, 6))]
        assert act(example, g * h, word) == act(example, h, act(example, g, word))


def test_tree_automorphism_composition(example, rng):
    p = example.presentation
    g, h = _random_word_element(p, rng), _random_word_element(p, rng)
    first, second = example.element(g), example.element(h)
    word = [3, 1, 4, 1, 5]
    assert first.then(second)(word) == second(first(word))
    assert first.inverse()(first(word)) == tuple(word)


@pytest.mark.parametrize("position", [1, 2, 3])
def test_levels_are_permuted_bijectively(example, position):
    g = generator(example.presentation, position)
    for level in range(1, 5):
        words = list(itertools.product(range(1, 9), repeat=level))
        images = {act(example, g, word) for word in words}
        assert len(images) == len(words)


def test_binary_representation_of_the_plane():
    f = cyclic_endomorphism(2, 1, (2, 1))
    rep = SelfSimilarRep(f)
    assert rep.degree == 2
    p = f.presentation
    g1, g2 = generator(p, 1), generator(p, 2)
    assert decompose(rep, g1).perm == (2, 1)
    assert decompose(rep, g1).states == (identity(p), g2)
    assert decompose(rep, g2).perm == (1, 2)
    assert decompose(rep, g2).states == (g1, g1)
    for level in range(1, 11):
        words = list(itertools.product((1, 2), repeat=level))
        for g in (g1, g2):
            assert len({act(rep, g, word) for word in words}) == len(words)


def test_binary_action_is_a_right_action(rng):
    rep = SelfSimilarRep(cyclic_endomorphism(2, 1, (2, 1)))
    p = rep.presentation
    for _ in range(1000):
        g, h = _random_word_element(p, rng), _random_word_element(p, rng)
        word = [rng.randint(1, 2) for _ in range(rng.randint(1, 6))]
        assert act(rep, g * h, word) == act(rep, h, act(rep, g, word))


def test_transversal_choice_only_relabels_letters(example, rng):
    canonical = SelfSimilarRep(example.endomorphism)
    relabel = [canonical.coset_letter(t) for t in example.transversal]
    p = example.presentation
    for _ in range(30):
        g = random_element(p, rng, bound=2)
        left, right = decompose(example, g), decompose(canonical, g)
        for letter in range(1, 9):
            assert relabel[left.perm[letter - 1] - 1] == right.perm[relabel[letter - 1] - 1]
        if not g.is_identity:
            for rep in (example, canonical):
                word = faithfulness_witness(rep, g, 8)
                assert word is not None
                assert act(rep, g, word) != word


def test_decomposition_is_cached(example):
    g = evaluate(example.presentation, "g1 g2")
    assert decompose(example, g) is decompose(example, g)


def test_format_cycles():
    assert format_cycles((1, 2, 3)) == "()"
    assert format_cycles((2, 1, 3)) == "(12)"
    assert format_cycles(tuple(range(2, 11)) + (1,)) == "(1 2 3 4 5 6 7 8 9 10)"


def test_other_ranks_build(rng):
    f = cyclic_endomorphism(2, 3, (2, 1))
    rep = SelfSimilarRep(f)
    assert rep.degree == 2**5
    p = f.presentation
    for _ in range(10):
        g, h = random_element(p, rng, bound=1), random_element(p, rng, bound=1)
        word = [rng.randint(1, rep.degree) for _ in range(3)]
        assert act(rep, g * h, word) == act(rep, h, act(rep, g, word))
    assert get_presentation(2, 3) is p
