import pytest

from selfsim.nilpotent import (
    HomomorphismError,
    apply_hom,
    evaluate,
    generator,
    get_presentation,
    hom_extend,
    identity,
    random_element,
)


def test_identity_map(rng):
    p = get_presentation(2, 4)
    hom = hom_extend([generator(p, 1), generator(p, 2)], p)
    for _ in range(10):
        a = random_element(p, rng)
        assert apply_hom(hom, a) == a


@pytest.mark.parametrize("rank, nilpotency_class", [(2, 3), (3, 3)])
def test_extension_is_a_homomorphism(rank, nilpotency_class, rng):
    p = get_presentation(rank, nilpotency_class)
    images = [random_element(p, rng, bound=2) for _ in range(rank)]
    hom = hom_extend(images, p)
    for _ in range(15):
        a, b = random_element(p, rng, bound=2), random_element(p, rng, bound=2)
        assert hom(a * b) == hom(a) * hom(b)
    assert all(hom(generator(p, i + 1)) == image for i, image in enumerate(images))


def test_quotient_map_to_lower_class(rng):
    source, target = get_presentation(2, 3), get_presentation(2, 2)
    quotient = hom_extend([generator(target, 1), generator(target, 2)], source, target)
    for _ in range(10):
        a, b = random_element(source, rng), random_element(source, rng)
        assert quotient(a * b) == quotient(a) * quotient(b)
        assert quotient(a).exponents == a.exponents[:3]
    assert quotient(evaluate(source, "[[g2,g1],g1]")) == identity(target)


def test_swap_sends_commutator_to_inverse():
    p = get_presentation(2, 2)
    swap = hom_extend([generator(p, 2), generator(p, 1)], p)
    assert swap(evaluate(p, "[g2,g1]")) == evaluate(p, "[g2,g1]^-1")


def test_invalid_extensions():
    low, high = get_presentation(2, 2), get_presentation(2, 3)
    with pytest.raises(HomomorphismError):
        hom_extend([generator(high, 1), generator(high, 2)], low)
    with pytest.raises(HomomorphismError):
        hom_extend([generator(low, 1)], low)
    other_rank = get_presentation(3, 2)
    with pytest.raises(HomomorphismError):
        hom_extend([generator(low, 1), generator(other_rank, 1)], low)
    hom = hom_extend([generator(low, 1), generator(low, 2)], low)
    with pytest.raises(HomomorphismError):
        apply_hom(hom, generator(high, 1))
