"""The rank-3 class-2 reference representation and its expected recursion."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..nilpotent.element import GroupElement, format_element, generator, identity
from ..nilpotent.presentation import Presentation, get_presentation
from ..nilpotent.words import evaluate
from .endomorphism import VirtualEndomorphism, cyclic_endomorphism
from .representation import SelfSimilarRep


EXAMPLE_RANK = 3
EXAMPLE_CLASS = 2
EXAMPLE_EXPONENTS = (2, 1, 1)
GREEK = ("α", "β", "γ")


def bracket_transversal(presentation: Presentation) -> list[GroupElement]:
    """g_1^a times products of [g_1, g_j], ordered by number of brackets, then a, then j."""
    g1 = generator(presentation, 1)
    brackets = [g1.commutator(generator(presentation, j)) for j in range(2, presentation.rank + 1)]
    values: list[GroupElement] = []
    for size in range(len(brackets) + 1):
        for a in (0, 1):
            for chosen in itertools.combinations(brackets, size):
                value = g1**a
                for bracket in chosen:
                    value = value * bracket
                values.append(value)
    return values


@dataclass(frozen=True)
class ExpectedRecursion:
    name: str
    cycles: str
    states: tuple[str, ...]
    reference_states: tuple[str, ...]

    @property
    def discrepancies(self) -> tuple[int, ...]:
        return tuple(
            position
            for position, (value, reference) in enumerate(zip(self.states, self.reference_states), start=1)
            if value != reference
        )


# Greek letters name the generator images: α = g1, β = g2, γ = g3.
EXPECTED_RECURSION = (
    ExpectedRecursion(
        name="α",
        cycles="(12)(35)(46)(78)",
        states=("e", "γ", "e", "e", "γ", "γ", "e", "γ"),
        reference_states=("e", "γ", "e", "e", "γ", "γ", "e", "γ"),
    ),
    ExpectedRecursion(
        name="β",
        cycles="(25)(68)",
        states=("α", "α", "α", "α", "α[γ,α]", "α", "α", "α[γ,α]"),
        # the last reference state abelianizes to α + γ, which no state of β can
        reference_states=("α", "α", "α", "α", "α[γ,α]", "α", "α", "αγ[γ,α]"),
    ),
    ExpectedRecursion(
        name="γ",
        cycles="(26)(58)",
        states=("β", "β", "β", "β", "β", "β[γ,β]", "β", "β[γ,β]"),
        reference_states=("β", "β", "β", "β", "β", "β[γ,β]", "β", "β[γ,β]"),
    ),
)


def greek_to_generators(text: str) -> str:
    for position, letter in enumerate(GREEK, start=1):
        text = text.replace(letter, f" g{position} ")
    return text


def parse_greek(presentation: Presentation, text: str) -> GroupElement:
    if text.strip() == "e":
        return identity(presentation)
    return evaluate(presentation, greek_to_generators(text))


def format_greek(a: GroupElement) -> str:
    return format_element(a, names=GREEK, separator="")


def example_endomorphism() -> VirtualEndomorphism:
    return cyclic_endomorphism(EXAMPLE_RANK, EXAMPLE_CLASS, EXAMPLE_EXPONENTS)


def example_rep() -> SelfSimilarRep:
    endomorphism = example_endomorphism()
    presentation = get_presentation(EXAMPLE_RANK, EXAMPLE_CLASS)
    return SelfSimilarRep(endomorphism, bracket_transversal(presentation))
