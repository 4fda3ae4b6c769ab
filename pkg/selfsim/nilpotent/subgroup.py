from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

from .element import GroupElement
from .presentation import Presentation, PresentationMismatchError, Vector, leading_index


LOGGER = logging.getLogger(__name__)


class InfiniteIndexError(ValueError):
    pass


class TransversalError(ValueError):
    pass


class SubgroupConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Subgroup:
    """Finitely generated subgroup stored as an induced (echelon) sequence.

    ``sequence[k]`` is either None or an element whose first non-zero
    exponent sits at position k and is positive.
    """

    presentation: Presentation
    generators: tuple[GroupElement, ...]
    sequence: tuple[Vector | None, ...]

    @property
    def pivots(self) -> tuple[int | None, ...]:
        return tuple(None if row is None else row[k] for k, row in enumerate(self.sequence))

    @property
    def is_finite_index(self) -> bool:
        return all(row is not None for row in self.sequence)

    @property
    def index(self) -> int | None:
        if not self.is_finite_index:
            return None
        return prod(self.pivots)

    def sequence_elements(self) -> list[GroupElement]:
        return [GroupElement(self.presentation, row) for row in self.sequence if row is not None]

    def __contains__(self, a: GroupElement) -> bool:
        return contains(self, a)


def _sift(presentation: Presentation, table: list[Vector | None], vector: Vector) -> bool:
    changed = False
    while True:
        k = leading_index(vector)
        if k is None:
            return changed
        pivot = table[k]
        if pivot is None:
            table[k] = vector if vector[k] > 0 else presentation.inverse(vector)
            return True
        if vector[k] % pivot[k] == 0:
            vector = presentation.multiply(presentation.power(pivot, -(vector[k] // pivot[k])), vector)
            continue

        # Euclid on the k-th exponent by left multiplication
        larger, smaller = pivot, vector
        while smaller[k] != 0:
            quotient = larger[k] // smaller[k]
            larger, smaller = smaller, presentation.multiply(presentation.power(smaller, -quotient), larger)
        table[k] = larger if larger[k] > 0 else presentation.inverse(larger)
        changed = True
        vector = smaller


def induced_sequence(presentation: Presentation, generators: Sequence[GroupElement]) -> Subgroup:
    """Echelon generating sequence of <generators>, closed under commutators."""
    gens = tuple(generators)
    for g in gens:
        if g.presentation.key != presentation.key:
            raise PresentationMismatchError(f"generator {g!r} does not lie in N_{presentation.key}")

    table: list[Vector | None] = [None] * presentation.size
    for g in gens:
        _sift(presentation, table, g.exponents)

    rounds = 0
    while True:
        rounds += 1
        changed = False
        rows = [row for row in table if row is not None]
        for position, lower in enumerate(rows):
            for upper in rows[position + 1 :]:
                changed |= _sift(presentation, table, presentation.commutator(upper, lower))
                changed |= _sift(presentation, table, presentation.commutator(upper, presentation.inverse(lower)))
        if not changed:
            break

    subgroup = Subgroup(presentation=presentation, generators=gens, sequence=tuple(table))
    for g in gens:
        if not contains(subgroup, g):
            raise SubgroupConsistencyError(f"generator {g!r} does not sift through its own induced sequence")
    LOGGER.debug(
        "Induced sequence for %d generators in N_%s: pivots %s after %d rounds",
        len(gens),
        presentation.key,
        subgroup.pivots,
        rounds,
    )
    return subgroup


def contains(subgroup: Subgroup, a: GroupElement) -> bool:
    presentation = subgroup.presentation
    if a.presentation.key != presentation.key:
        raise PresentationMismatchError(f"element {a!r} does not lie in N_{presentation.key}")
    vector = a.exponents
    while True:
        k = leading_index(vector)
        if k is None:
            return True
        pivot = subgroup.sequence[k]
        if pivot is None or vector[k] % pivot[k]:
            return False
        vector = presentation.multiply(presentation.power(pivot, -(vector[k] // pivot[k])), vector)


def canonical_rep(subgroup: Subgroup, a: GroupElement) -> GroupElement:
    """Representative of the right coset H*a with every exponent in [0, pivot)."""
    if not subgroup.is_finite_index:
        raise InfiniteIndexError("canonical representatives need a finite-index subgroup")
    presentation = subgroup.presentation
    if a.presentation.key != presentation.key:
        raise PresentationMismatchError(f"element {a!r} does not lie in N_{presentation.key}")
    vector = a.exponents
    for k, pivot in enumerate(subgroup.sequence):
        quotient = vector[k] // pivot[k]
        if quotient:
            vector = presentation.multiply(presentation.power(pivot, -quotient), vector)
    return GroupElement(presentation, vector)


def iter_transversal(subgroup: Subgroup) -> Iterator[GroupElement]:
    if not subgroup.is_finite_index:
        raise InfiniteIndexError("only finite-index subgroups have a finite transversal")
    presentation = subgroup.presentation
    for exponents in itertools.product(*(range(p) for p in subgroup.pivots)):
        yield GroupElement(presentation, exponents)


def transversal(subgroup: Subgroup) -> list[GroupElement]:
    """Canonical right transversal in lexicographic exponent order; starts with the identity."""
    return list(iter_transversal(subgroup))


def validate_transversal(subgroup: Subgroup, elements: Sequence[GroupElement]) -> list[GroupElement]:
    index = subgroup.index
    if index is None:
        raise InfiniteIndexError("only finite-index subgroups have a finite transversal")
    values = list(elements)
    if len(values) != index:
        raise TransversalError(f"expected {index} coset representatives, got {len(values)}")
    seen: dict[Vector, int] = {}
    for position, t in enumerate(values, start=1):
        key = canonical_rep(subgroup, t).exponents
        if key in seen:
            raise TransversalError(f"representatives {seen[key]} and {position} lie in the same coset")
        seen[key] = position
    return values


def layer_pivots(subgroup: Subgroup, weight: int) -> tuple[int | None, ...]:
    """Pivots of the coordinates whose basis elements have the given weight."""
    weights = subgroup.presentation.weights
    return tuple(p for p, w in zip(subgroup.pivots, weights) if w == weight)


def isomorphic_subgroup(
    presentation: Presentation,
    exponents: Sequence[int],
    tails: Sequence[GroupElement] | None = None,
) -> Subgroup:
    """<g_i^{n_i} z_i> for derived-subgroup tails z_i (identity when omitted)."""
    values = tuple(int(n) for n in exponents)
    if len(values) != presentation.rank or any(n < 1 for n in values):
        raise ValueError(f"expected {presentation.rank} positive exponents, got {values}")
    tail_values = tuple(tails) if tails is not None else ()
    if tail_values and len(tail_values) != presentation.rank:
        raise ValueError(f"expected {presentation.rank} tails, got {len(tail_values)}")
    generators: list[GroupElement] = []
    for i, n in enumerate(values):
        g = GroupElement(presentation, presentation.unit(i, n))
        if tail_values:
            tail = tail_values[i]
            if any(tail.abelianization()):
                raise ValueError(f"tail {tail!r} is not in the derived subgroup")
            g = g * tail
        generators.append(g)
    return induced_sequence(presentation, generators)
