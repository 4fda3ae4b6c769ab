from __future__ import annotations

import logging
from dataclasses import dataclass
from threading import RLock
from typing import Sequence

from sympy.combinatorics import Permutation

from ..config import get_portrait_node_cap
from ..nilpotent.element import GroupElement
from ..nilpotent.presentation import Vector
from ..nilpotent.subgroup import canonical_rep, contains, transversal, validate_transversal
from .endomorphism import VirtualEndomorphism


LOGGER = logging.getLogger(__name__)


class DecompositionError(RuntimeError):
    pass


class LetterRangeError(ValueError):
    pass


class PortraitCapExceededError(ValueError):
    pass


def format_cycles(perm: Sequence[int]) -> str:
    """Cycle notation with 1-based letters; the identity prints as ``()``."""
    cycles = Permutation([p - 1 for p in perm]).cyclic_form
    if not cycles:
        return "()"
    if len(perm) < 10:
        return "".join("(" + "".join(str(i + 1) for i in cycle) + ")" for cycle in cycles)
    return "".join("(" + " ".join(str(i + 1) for i in cycle) + ")" for cycle in cycles)


@dataclass(frozen=True)
class Decomposition:
    """g = sigma * (s_1, ..., s_m): t_i g = h_i t_{sigma(i)} and s_i = f(h_i)."""

    perm: tuple[int, ...]
    states: tuple[GroupElement, ...]

    @property
    def cycles(self) -> str:
        return format_cycles(self.perm)

    @property
    def is_trivial_action(self) -> bool:
        return all(image == letter for letter, image in enumerate(self.perm, start=1))


class SelfSimilarRep:
    """Faithful-by-construction self-similar action of N_{r,c} on words over 1..m."""

    def __init__(self, endomorphism: VirtualEndomorphism, representatives: Sequence[GroupElement] | None = None) -> None:
        domain = endomorphism.domain
        if representatives is None:
            values = transversal(domain)
        else:
            values = validate_transversal(domain, representatives)
        self.endomorphism = endomorphism
        self.presentation = endomorphism.presentation
        self.transversal: tuple[GroupElement, ...] = tuple(values)
        self._letters: dict[Vector, int] = {
            canonical_rep(domain, t).exponents: letter for letter, t in enumerate(self.transversal, start=1)
        }
        self._inverses = tuple(t.inverse() for t in self.transversal)
        self._lock = RLock()
        self._decompositions: dict[Vector, Decomposition] = {}
        LOGGER.info("Self-similar representation over an alphabet of %d letters", self.degree)

    @property
    def degree(self) -> int:
        return len(self.transversal)

    def coset_letter(self, g: GroupElement) -> int:
        return self._letters[canonical_rep(self.endomorphism.domain, g).exponents]

    def decompose(self, g: GroupElement) -> Decomposition:
        with self._lock:
            cached = self._decompositions.get(g.exponents)
        if cached is not None:
            return cached

        domain = self.endomorphism.domain
        perm: list[int] = []
        states: list[GroupElement] = []
        for letter, t in enumerate(self.transversal, start=1):
            moved = t * g
            target = self.coset_letter(moved)
            h = moved * self._inverses[target - 1]
            if not contains(domain, h):
                raise DecompositionError(f"t_{letter} * {g} * t_{target}^-1 fell outside the domain")
            perm.append(target)
            states.append(self.endomorphism(h))

        decomposition = Decomposition(perm=tuple(perm), states=tuple(states))
        with self._lock:
            self._decompositions[g.exponents] = decomposition
        LOGGER.debug("Decomposed %s as %s", g, decomposition.cycles)
        return decomposition

    def check_letter(self, letter: int) -> int:
        if letter < 1 or letter > self.degree:
            raise LetterRangeError(f"letter {letter} out of range 1..{self.degree}")
        return letter

    def element(self, g: GroupElement) -> "TreeAutomorphism":
        return TreeAutomorphism(self, g)


def decompose(rep: SelfSimilarRep, g: GroupElement) -> Decomposition:
    return rep.decompose(g)


def act(rep: SelfSimilarRep, g: GroupElement, word: Sequence[int]) -> tuple[int, ...]:
    """Image of a word under g; letters are read left to right."""
    letters = [rep.check_letter(int(letter)) for letter in word]
    image: list[int] = []
    current = g
    for letter in letters:
        if current.is_identity:
            image.append(letter)
            continue
        decomposition = rep.decompose(current)
        image.append(decomposition.perm[letter - 1])
        current = decomposition.states[letter - 1]
    return tuple(image)


@dataclass(frozen=True)
class Portrait:
    depth: int
    perm: tuple[int, ...]
    children: tuple["Portrait", ...] = ()

    @property
    def cycles(self) -> str:
        return format_cycles(self.perm)

    def node_count(self) -> int:
        return 1 + sum(child.node_count() for child in self.children)


def portrait_size(degree: int, depth: int) -> int:
    return sum(degree**level for level in range(depth + 1))


def portrait(rep: SelfSimilarRep, g: GroupElement, depth: int, *, cap: int | None = None) -> Portrait:
    """Level-by-level permutations of g down to the given depth."""
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    limit = get_portrait_node_cap() if cap is None else cap
    size = portrait_size(rep.degree, depth)
    if size > limit:
        raise PortraitCapExceededError(f"portrait of depth {depth} has {size} nodes, above the cap of {limit}")
    return _portrait(rep, g, depth)


def _portrait(rep: SelfSimilarRep, g: GroupElement, depth: int) -> Portrait:
    decomposition = rep.decompose(g)
    if depth == 0:
        return Portrait(depth=0, perm=decomposition.perm)
    children = tuple(_portrait(rep, state, depth - 1) for state in decomposition.states)
    return Portrait(depth=depth, perm=decomposition.perm, children=children)


@dataclass(frozen=True, eq=False)
class TreeAutomorphism:
    """Handle pairing a group element with the representation it acts through."""

    rep: SelfSimilarRep
    group_element: GroupElement

    def __call__(self, word: Sequence[int]) -> tuple[int, ...]:
        return act(self.rep, self.group_element, word)

    def then(self, other: "TreeAutomorphism") -> "TreeAutomorphism":
        """Apply self first, then other (right action)."""
        return TreeAutomorphism(self.rep, self.group_element * other.group_element)

    def inverse(self) -> "TreeAutomorphism":
        return TreeAutomorphism(self.rep, self.group_element.inverse())

    def decompose(self) -> Decomposition:
        return self.rep.decompose(self.group_element)

    def portrait(self, depth: int) -> Portrait:
        return portrait(self.rep, self.group_element, depth)
