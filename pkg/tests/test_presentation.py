import pytest

from selfsim.nilpotent import (
    PresentationMismatchError,
    Word,
    basis_element,
    collect,
    element,
    element_weight,
    evaluate,
    generator,
    get_presentation,
    identity,
    random_derived_element,
    random_element,
)


def _class2_product(presentation, x, y):
    basis = presentation.basis
    z = [a + b for a, b in zip(x, y)]
    for entry in basis.entries:
        if entry.weight == 2:
            z[entry.id - 1] += x[entry.left - 1] * y[entry.right - 1]
    return tuple(z)


def _class2_inverse(presentation, x):
    z = [-a for a in x]
    for entry in presentation.basis.entries:
        if entry.weight == 2:
            z[entry.id - 1] += x[entry.left - 1] * x[entry.right - 1]
    return tuple(z)


def test_worked_class2_product():
    p = get_presentation(3, 2)
    x = element(p, (1, 2, 3, 4, 5, 6))
    y = element(p, (-1, 3, 2, 0, 1, -2))
    # d += a'b, e += a'c, f += b'c
    assert (x * y).exponents == (0, 5, 5, 4 + 0 - 2, 5 + 1 - 3, 6 - 2 + 3 * 3)


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_class2_matches_closed_form(rank, rng):
    p = get_presentation(rank, 2)
    for _ in range(200):
        x = random_element(p, rng, bound=5)
        y = random_element(p, rng, bound=5)
        assert (x * y).exponents == _class2_product(p, x.exponents, y.exponents)
        assert x.inverse().exponents == _class2_inverse(p, x.exponents)


def test_class2_powers(rng):
    p = get_presentation(3, 2)
    for _ in range(50):
        x = random_element(p, rng)
        n = rng.randint(-6, 6)
        expected = [n * a for a in x.exponents]
        for entry in p.basis.entries:
            if entry.weight == 2:
                expected[entry.id - 1] += n * (n - 1) // 2 * x.exponents[entry.left - 1] * x.exponents[entry.right - 1]
        assert (x**n).exponents == tuple(expected)


@pytest.mark.parametrize("rank, nilpotency_class", [(2, 3), (2, 4), (3, 3), (2, 5)])
def test_group_axioms(rank, nilpotency_class, rng):
    p = get_presentation(rank, nilpotency_class)
    e = identity(p)
    for _ in range(25):
        x, y, z = (random_element(p, rng, bound=2) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * x.inverse() == e
        assert x.inverse() * x == e
        assert x * e == x == e * x


@pytest.mark.parametrize("rank, nilpotency_class", [(2, 2), (2, 3), (3, 2)])
def test_group_properties_on_many_triples(rank, nilpotency_class, rng):
    p = get_presentation(rank, nilpotency_class)
    e = identity(p)
    for _ in range(1000):
        x, y, z = (random_element(p, rng, bound=5) for _ in range(3))
        xy = x * y
        assert xy * z == x * (y * z)
        assert x * x.inverse() == e == x.inverse() * x
        assert x * e == x == e * x
        if nilpotency_class == 2:
            assert xy.exponents == _class2_product(p, x.exponents, y.exponents)
            assert x.inverse().exponents == _class2_inverse(p, x.exponents)


@pytest.mark.parametrize("rank, nilpotency_class", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)])
def test_left_normed_commutators_collapse_above_class(rank, nilpotency_class, rng):
    p = get_presentation(rank, nilpotency_class)
    for _ in range(300):
        factors = [random_element(p, rng, bound=3) for _ in range(nilpotency_class + 1)]
        nested = factors[0]
        for factor in factors[1:]:
            nested = nested.commutator(factor)
        assert nested.is_identity


def test_commutators_of_class_length_survive():
    p = get_presentation(2, 3)
    g1, g2 = generator(p, 1), generator(p, 2)
    assert not g2.commutator(g1).commutator(g1).is_identity


def _random_word(p, rng):
    return Word.from_pairs([(rng.randint(1, p.rank), rng.randint(-3, 3)) for _ in range(rng.randint(0, 6))])


@pytest.mark.parametrize("rank, nilpotency_class", [(2, 2), (2, 3), (3, 2)])
def test_collection_is_multiplicative_over_concatenation(rank, nilpotency_class, rng):
    p = get_presentation(rank, nilpotency_class)
    for _ in range(200):
        first, second = _random_word(p, rng), _random_word(p, rng)
        joined = Word(first.letters + second.letters)
        assert collect(p, joined) == collect(p, first) * collect(p, second)


@pytest.mark.parametrize("rank, nilpotency_class", [(2, 3), (3, 3), (2, 4)])
def test_power_agrees_with_repeated_product(rank, nilpotency_class, rng):
    p = get_presentation(rank, nilpotency_class)
    for _ in range(10):
        x = random_element(p, rng, bound=2)
        n = rng.randint(0, 7)
        expected = identity(p)
        for _ in range(n):
            expected = expected * x
        assert x**n == expected
        assert x ** (-n) == expected.inverse()


def test_hall_witt_identity(rng):
    p = get_presentation(3, 3)
    e = identity(p)
    for _ in range(10):
        x, y, z = (random_element(p, rng, bound=2) for _ in range(3))
        first = x.commutator(y.inverse()).commutator(z).conjugate(y)
        second = y.commutator(z.inverse()).commutator(x).conjugate(z)
        third = z.commutator(x.inverse()).commutator(y).conjugate(x)
        assert first * second * third == e


def test_basic_commutators_are_basis_elements():
    p = get_presentation(2, 3)
    assert evaluate(p, "[g2,g1]") == basis_element(p, 3)
    assert evaluate(p, "[[g2,g1],g1]") == basis_element(p, 4)
    assert evaluate(p, "[[g2,g1],g2]") == basis_element(p, 5)


def test_non_basic_commutator_uses_jacobi():
    p = get_presentation(3, 3)
    # [[x3,x2],x1] = [[x3,x1],x2] - [[x2,x1],x3] in the top layer
    expected = [0] * p.size
    expected[9] = 1
    expected[11] = -1
    assert evaluate(p, "[[g3,g2],g1]").exponents == tuple(expected)


def test_commutators_vanish_above_class(rng):
    p = get_presentation(2, 2)
    for _ in range(20):
        x = random_element(p, rng)
        y = random_derived_element(p, rng)
        assert x.commutator(y).is_identity


def test_conjugation_identity(rng):
    p = get_presentation(2, 4)
    for _ in range(10):
        x, y = random_element(p, rng, bound=2), random_element(p, rng, bound=2)
        assert x.conjugate(y) == x * x.commutator(y)


def test_element_weight():
    p = get_presentation(2, 3)
    assert element_weight(identity(p)) is None
    assert element_weight(generator(p, 2)) == 1
    assert element_weight(evaluate(p, "[g2,g1]^3 [[g2,g1],g2]")) == 2


def test_mismatched_groups_are_rejected():
    with pytest.raises(PresentationMismatchError):
        generator(get_presentation(2, 2), 1) * generator(get_presentation(2, 3), 1)
    with pytest.raises(PresentationMismatchError):
        element(get_presentation(2, 2), (1, 2))


def test_concurrent_collection_is_consistent(rng):
    from concurrent.futures import ThreadPoolExecutor

    from selfsim.nilpotent.presentation import Presentation

    p = Presentation(2, 5)
    samples = [(random_element(p, rng, bound=2), random_element(p, rng, bound=2)) for _ in range(40)]
    expected = [(x * y).exponents for x, y in samples]

    fresh = Presentation(2, 5)
    rebased = [(element(fresh, x.exponents), element(fresh, y.exponents)) for x, y in samples]
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda pair: (pair[0] * pair[1]).exponents, rebased))
    assert results == expected
