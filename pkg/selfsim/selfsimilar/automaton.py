from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from ..config import get_state_cutoff
from ..nilpotent.element import GroupElement, generator
from ..nilpotent.presentation import Vector
from .representation import LetterRangeError, SelfSimilarRep


LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class StateClosure:
    """States reachable from the seeds, in breadth-first discovery order.

    ``elements`` is None when the cutoff was reached before closing up.
    """

    elements: tuple[GroupElement, ...] | None
    cutoff: int
    explored: int

    @property
    def cutoff_exceeded(self) -> bool:
        return self.elements is None

    def __len__(self) -> int:
        if self.elements is None:
            raise TypeError("state closure exceeded its cutoff and has no size")
        return len(self.elements)


def state_closure(rep: SelfSimilarRep, seeds: Sequence[GroupElement], cutoff: int | None = None) -> StateClosure:
    limit = get_state_cutoff() if cutoff is None else cutoff
    if limit < 1:
        raise ValueError(f"cutoff must be positive, got {limit}")

    found: dict[Vector, GroupElement] = {}
    queue: deque[GroupElement] = deque()
    for seed in seeds:
        if seed.exponents not in found:
            if len(found) >= limit:
                return StateClosure(elements=None, cutoff=limit, explored=len(found))
            found[seed.exponents] = seed
            queue.append(seed)

    while queue:
        current = queue.popleft()
        for state in rep.decompose(current).states:
            if state.exponents in found:
                continue
            if len(found) >= limit:
                LOGGER.warning("State closure stopped at the cutoff of %d states", limit)
                return StateClosure(elements=None, cutoff=limit, explored=len(found))
            found[state.exponents] = state
            queue.append(state)

    LOGGER.debug("State closure has %d states", len(found))
    return StateClosure(elements=tuple(found.values()), cutoff=limit, explored=len(found))


@dataclass(frozen=True)
class AutomatonState:
    element: GroupElement
    perm: tuple[int, ...]
    transitions: tuple[int, ...]


@dataclass(frozen=True)
class Automaton:
    """Finite Mealy automaton: state ids index ``states``; transitions are per letter."""

    alphabet: int
    states: tuple[AutomatonState, ...]

    def state_id(self, g: GroupElement) -> int:
        for position, state in enumerate(self.states):
            if state.element == g:
                return position
        raise KeyError(f"{g} is not a state of this automaton")


def automaton_from_closure(rep: SelfSimilarRep, closure: StateClosure) -> Automaton:
    if closure.elements is None:
        raise ValueError("cannot build an automaton from a closure that exceeded its cutoff")
    ids = {g.exponents: position for position, g in enumerate(closure.elements)}
    states: list[AutomatonState] = []
    for g in closure.elements:
        decomposition = rep.decompose(g)
        transitions = tuple(ids[s.exponents] for s in decomposition.states)
        states.append(AutomatonState(element=g, perm=decomposition.perm, transitions=transitions))
    return Automaton(alphabet=rep.degree, states=tuple(states))


def automaton_act(automaton: Automaton, state: int, word: Sequence[int]) -> tuple[int, ...]:
    """Run the automaton from a state; agrees with ``act`` on the underlying element."""
    image: list[int] = []
    current = state
    for letter in word:
        if letter < 1 or letter > automaton.alphabet:
            raise LetterRangeError(f"letter {letter} out of range 1..{automaton.alphabet}")
        node = automaton.states[current]
        image.append(node.perm[letter - 1])
        current = node.transitions[letter - 1]
    return tuple(image)


def faithfulness_witness(rep: SelfSimilarRep, g: GroupElement, max_depth: int) -> tuple[int, ...] | None:
    """Shortest word whose image under g differs from itself, or None up to max_depth."""
    if g.is_identity or max_depth < 1:
        return None
    visited: set[Vector] = {g.exponents}
    queue: deque[tuple[tuple[int, ...], GroupElement]] = deque([((), g)])
    while queue:
        prefix, current = queue.popleft()
        decomposition = rep.decompose(current)
        for letter, image in enumerate(decomposition.perm, start=1):
            if image != letter:
                return prefix + (letter,)
        if len(prefix) + 1 >= max_depth:
            continue
        for letter, state in enumerate(decomposition.states, start=1):
            if state.is_identity or state.exponents in visited:
                continue
            visited.add(state.exponents)
            queue.append((prefix + (letter,), state))
    return None


def is_level1_transitive(rep: SelfSimilarRep, elements: Sequence[GroupElement] | None = None) -> bool:
    """Transitivity of the first-level permutations of the given elements (default: generators)."""
    if elements is None:
        elements = [generator(rep.presentation, i) for i in range(1, rep.presentation.rank + 1)]
    permutations = [Permutation([p - 1 for p in rep.decompose(g).perm]) for g in elements]
    if rep.degree == 1:
        return True
    group = PermutationGroup(permutations or [Permutation(rep.degree - 1)])
    return group.is_transitive()
