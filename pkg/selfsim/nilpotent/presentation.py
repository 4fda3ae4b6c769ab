from __future__ import annotations

import logging
from threading import RLock

from ..calculus import HallBasis, hall_basis


LOGGER = logging.getLogger(__name__)

Vector = tuple[int, ...]


class PresentationMismatchError(ValueError):
    pass


def leading_index(vector: Vector) -> int | None:
    for index, value in enumerate(vector):
        if value:
            return index
    return None


class Presentation:
    """Consistent nilpotent presentation of N_{r,c} over its Hall basis.

    Exponent vectors are 0-indexed tuples here; basis ids stay 1-based.
    Relation and conjugation tables are filled lazily under one lock.
    """

    def __init__(self, rank: int, nilpotency_class: int, basis: HallBasis | None = None) -> None:
        self.basis = basis if basis is not None else hall_basis(rank, nilpotency_class)
        self.rank = self.basis.rank
        self.nilpotency_class = self.basis.nilpotency_class
        self.size = len(self.basis)
        self.weights = self.basis.weights
        self._identity: Vector = (0,) * self.size
        self._lock = RLock()
        self._relations: dict[tuple[int, int], Vector] = {}
        self._images: dict[tuple[int, int, int], Vector] = {}

    def __repr__(self) -> str:
        return f"Presentation(rank={self.rank}, nilpotency_class={self.nilpotency_class}, size={self.size})"

    @property
    def key(self) -> tuple[int, int]:
        return (self.rank, self.nilpotency_class)

    @property
    def identity(self) -> Vector:
        return self._identity

    def unit(self, index: int, exponent: int = 1) -> Vector:
        values = [0] * self.size
        values[index] = exponent
        return tuple(values)

    def check_vector(self, vector: tuple[int, ...] | list[int]) -> Vector:
        values = tuple(int(v) for v in vector)
        if len(values) != self.size:
            raise PresentationMismatchError(
                f"N_{{{self.rank},{self.nilpotency_class}}} elements have {self.size} exponents, got {len(values)}"
            )
        return values

    def _generator_then(self, index: int, tail: Vector) -> Vector:
        # c_index * tail for tail supported strictly above index
        return (0,) * index + (1,) + tail[index + 1 :]

    def relation(self, left: int, right: int) -> Vector:
        """Normal form of [c_left, c_right] for left > right (0-based)."""
        if left <= right:
            raise ValueError(f"relation needs left > right, got {left}, {right}")
        if self.weights[left] + self.weights[right] > self.nilpotency_class:
            return self._identity

        with self._lock:
            cached = self._relations.get((left, right))
            if cached is not None:
                return cached

            pair_id = self.basis.pair_id(left + 1, right + 1)
            if pair_id is not None:
                result = self.unit(pair_id - 1)
            else:
                entry = self.basis.entries[left]
                outer, inner = entry.left - 1, entry.right - 1
                # c_left = [c_outer, c_inner] with right < inner, so conjugate both sides by c_right
                outer_conj = self._generator_then(outer, self.relation(outer, right))
                inner_conj = self._generator_then(inner, self.relation(inner, right))
                result = self.multiply(
                    self.unit(left, -1), self.commutator(outer_conj, inner_conj)
                )
                LOGGER.debug("Derived relation [c%d,c%d] in N_{%d,%d}", left + 1, right + 1, *self.key)
            self._relations[(left, right)] = result
            return result

    def _conjugate_generator(self, target: int, by: int, exponent: int) -> Vector:
        """c_by^-e c_target c_by^e for target > by."""
        if self.weights[target] + self.weights[by] > self.nilpotency_class:
            return self.unit(target)

        key = (target, by, exponent)
        with self._lock:
            cached = self._images.get(key)
            if cached is not None:
                return cached

            if exponent == 1:
                result = self._generator_then(target, self.relation(target, by))
            elif exponent == -1:
                inverted = self.inverse(self.relation(target, by))
                result = self._generator_then(target, self.conjugate(inverted, by, -1))
            else:
                half = exponent // 2
                rest = exponent - half
                result = self.conjugate(self._conjugate_generator(target, by, rest), by, half)
            self._images[key] = result
            return result

    def conjugate(self, vector: Vector, by: int, exponent: int) -> Vector:
        """c_by^-e * vector * c_by^e for a vector supported strictly above ``by``."""
        if exponent == 0:
            return vector
        support = [index for index in range(by + 1, self.size) if vector[index]]
        limit = self.nilpotency_class - self.weights[by]
        if all(self.weights[index] > limit for index in support):
            return vector

        result = self._identity
        for index in support:
            image = self._conjugate_generator(index, by, exponent)
            result = self.multiply(result, self.power(image, vector[index]))
        return result

    def multiply_generator(self, vector: Vector, index: int, exponent: int) -> Vector:
        """vector * c_index^exponent."""
        if exponent == 0:
            return vector
        tail = (0,) * (index + 1) + vector[index + 1 :]
        moved = self.conjugate(tail, index, exponent)
        return vector[:index] + (vector[index] + exponent,) + moved[index + 1 :]

    def multiply(self, left: Vector, right: Vector) -> Vector:
        result = left
        for index, exponent in enumerate(right):
            if exponent:
                result = self.multiply_generator(result, index, exponent)
        return result

    def inverse(self, vector: Vector) -> Vector:
        lead = leading_index(vector)
        if lead is None:
            return vector
        exponent = vector[lead]
        tail = (0,) * (lead + 1) + vector[lead + 1 :]
        rest = self.conjugate(self.inverse(tail), lead, -exponent)
        return (0,) * lead + (-exponent,) + rest[lead + 1 :]

    def power(self, vector: Vector, exponent: int) -> Vector:
        if exponent == 0:
            return self._identity
        if exponent < 0:
            vector = self.inverse(vector)
            exponent = -exponent
        lead = leading_index(vector)
        if lead is None:
            return vector
        if not any(vector[lead + 1 :]):
            return self.unit(lead, vector[lead] * exponent)

        result = self._identity
        base = vector
        while exponent:
            if exponent & 1:
                result = self.multiply(result, base)
            exponent >>= 1
            if exponent:
                base = self.multiply(base, base)
        return result

    def commutator(self, left: Vector, right: Vector) -> Vector:
        """[left, right] = left^-1 right^-1 left right."""
        return self.multiply(
            self.multiply(self.inverse(left), self.inverse(right)),
            self.multiply(left, right),
        )


_PRESENTATIONS: dict[tuple[int, int], Presentation] = {}
_REGISTRY_LOCK = RLock()


def get_presentation(rank: int, nilpotency_class: int) -> Presentation:
    """Shared presentation per (r, c); its tables are reused by every caller."""
    key = (int(rank), int(nilpotency_class))
    with _REGISTRY_LOCK:
        presentation = _PRESENTATIONS.get(key)
        if presentation is None:
            presentation = Presentation(*key)
            _PRESENTATIONS[key] = presentation
            LOGGER.info("Built presentation for N_{%d,%d} with %d generators", key[0], key[1], presentation.size)
        return presentation


def clear_presentations() -> None:
    with _REGISTRY_LOCK:
        _PRESENTATIONS.clear()
