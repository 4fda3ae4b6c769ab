from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from ..calculus import format_commutator
from .presentation import Presentation, PresentationMismatchError, Vector, leading_index


@dataclass(frozen=True, eq=False)
class GroupElement:
    """Element of N_{r,c} in Mal'cev normal form c_1^{a_1} ... c_M^{a_M}."""

    presentation: Presentation
    exponents: Vector

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.presentation.key == other.presentation.key and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash((self.presentation.key, self.exponents))

    def __repr__(self) -> str:
        return f"GroupElement({self.presentation.rank}, {self.presentation.nilpotency_class}, {self.exponents})"

    def __str__(self) -> str:
        return format_element(self)

    def _check(self, other: "GroupElement") -> None:
        if self.presentation.key != other.presentation.key:
            raise PresentationMismatchError(
                f"cannot combine elements of N_{self.presentation.key} and N_{other.presentation.key}"
            )

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check(other)
        return GroupElement(self.presentation, self.presentation.multiply(self.exponents, other.exponents))

    def __pow__(self, exponent: int) -> "GroupElement":
        return GroupElement(self.presentation, self.presentation.power(self.exponents, int(exponent)))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.presentation, self.presentation.inverse(self.exponents))

    def commutator(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.presentation, self.presentation.commutator(self.exponents, other.exponents))

    def conjugate(self, by: "GroupElement") -> "GroupElement":
        """by^-1 * self * by."""
        return by.inverse() * self * by

    @property
    def is_identity(self) -> bool:
        return not any(self.exponents)

    @property
    def leading_index(self) -> int | None:
        """0-based index of the first non-zero exponent."""
        return leading_index(self.exponents)

    def abelianization(self) -> tuple[int, ...]:
        return self.exponents[: self.presentation.rank]


def identity(presentation: Presentation) -> GroupElement:
    return GroupElement(presentation, presentation.identity)


def element(presentation: Presentation, exponents: Sequence[int]) -> GroupElement:
    return GroupElement(presentation, presentation.check_vector(exponents))


def generator(presentation: Presentation, index: int) -> GroupElement:
    """The free generator g_index (1-based)."""
    if index < 1 or index > presentation.rank:
        raise ValueError(f"generator index {index} out of range 1..{presentation.rank}")
    return GroupElement(presentation, presentation.unit(index - 1))


def basis_element(presentation: Presentation, basis_id: int) -> GroupElement:
    if basis_id < 1 or basis_id > presentation.size:
        raise ValueError(f"basis id {basis_id} out of range 1..{presentation.size}")
    return GroupElement(presentation, presentation.unit(basis_id - 1))


def element_weight(a: GroupElement) -> int | None:
    """Weight of the first non-trivial Hall coordinate; None for the identity."""
    lead = a.leading_index
    if lead is None:
        return None
    return a.presentation.weights[lead]


def default_names(rank: int) -> tuple[str, ...]:
    return tuple(f"g{i}" for i in range(1, rank + 1))


def format_element(a: GroupElement, names: Sequence[str] | None = None, separator: str = "*") -> str:
    """Normal form as text; re-parseable by ``parse_word`` with the default names."""
    presentation = a.presentation
    labels = names if names is not None else default_names(presentation.rank)
    factors: list[str] = []
    for index, exponent in enumerate(a.exponents):
        if not exponent:
            continue
        base = format_commutator(presentation.basis, index + 1, labels)
        factors.append(base if exponent == 1 else f"{base}^{exponent}")
    return separator.join(factors) if factors else "e"


def random_element(presentation: Presentation, rng: random.Random, bound: int = 3) -> GroupElement:
    exponents = tuple(rng.randint(-bound, bound) for _ in range(presentation.size))
    return GroupElement(presentation, exponents)


def random_derived_element(presentation: Presentation, rng: random.Random, bound: int = 3) -> GroupElement:
    """Random element of the derived subgroup: zero abelianization."""
    rank = presentation.rank
    exponents = tuple(0 if i < rank else rng.randint(-bound, bound) for i in range(presentation.size))
    return GroupElement(presentation, exponents)
