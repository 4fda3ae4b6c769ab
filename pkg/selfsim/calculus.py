"""Free Lie algebra counting and the Hall basis of free nilpotent groups."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, gcd, prod
from typing import Iterator, Sequence

from sympy import divisors, factorint

from .config import get_basis_cap


LOGGER = logging.getLogger(__name__)


class BasisCapExceededError(ValueError):
    pass


class WittDivisibilityError(RuntimeError):
    pass


def _require_positive(name: str, value: int) -> int:
    if int(value) != value or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def _require_exponents(rank: int, exponents: Sequence[int]) -> tuple[int, ...]:
    values = tuple(int(n) for n in exponents)
    if len(values) != rank:
        raise ValueError(f"expected {rank} exponents, got {len(values)}")
    if any(n < 1 for n in values):
        raise ValueError("exponents must be positive integers")
    return values


def mobius(d: int) -> int:
    _require_positive("d", d)
    if d == 1:
        return 1
    factors = factorint(d)
    if any(multiplicity > 1 for multiplicity in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def witt_rank(rank: int, weight: int) -> int:
    """Dimension of the weight-n component of the free Lie ring on r generators."""
    rank = _require_positive("rank", rank)
    weight = _require_positive("weight", weight)
    total = sum(mobius(d) * rank ** (weight // d) for d in divisors(weight))
    quotient, remainder = divmod(total, weight)
    if remainder:
        raise WittDivisibilityError(f"Witt sum for r={rank}, n={weight} is not divisible by n")
    return quotient


def _multinomial(parts: Sequence[int]) -> int:
    result = factorial(sum(parts))
    for part in parts:
        result //= factorial(part)
    return result


def witt_multirank(parts: Sequence[int]) -> int:
    """Rank of the multihomogeneous component with the given multidegree."""
    values = tuple(int(p) for p in parts)
    if not values or any(p < 0 for p in values):
        raise ValueError("multidegree must be a non-empty tuple of non-negative integers")
    weight = sum(values)
    if weight == 0:
        raise ValueError("multidegree must have positive total weight")

    common = 0
    for part in values:
        common = gcd(common, part)

    total = 0
    for d in divisors(common):
        total += mobius(d) * _multinomial([p // d for p in values])
    quotient, remainder = divmod(total, weight)
    if remainder:
        raise WittDivisibilityError(f"Witt sum for multidegree {values} is not divisible by {weight}")
    return quotient


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def weight_distribution(rank: int, weight: int, degree: int) -> int:
    """Number of weight-n basic commutators containing the first generator exactly k times."""
    rank = _require_positive("rank", rank)
    weight = _require_positive("weight", weight)
    if degree < 0 or degree > weight:
        raise ValueError(f"degree must lie in [0, {weight}], got {degree}")
    return sum(witt_multirank((degree,) + rest) for rest in _compositions(weight - degree, rank - 1))


def arn(rank: int, weight: int) -> int:
    """Sum of the first-generator degree over all weight-n basic commutators."""
    rank = _require_positive("rank", rank)
    weight = _require_positive("weight", weight)
    return sum(parts[0] * witt_multirank(parts) for parts in _compositions(weight, rank))


def index_exponent(rank: int, nilpotency_class: int) -> int:
    rank = _require_positive("rank", rank)
    nilpotency_class = _require_positive("class", nilpotency_class)
    if rank == 1:
        return 1
    total = 0
    for d in range(1, nilpotency_class + 1):
        total += mobius(d) * (rank ** (nilpotency_class // d) - 1) // (rank - 1)
    return total


def subgroup_index_formula(rank: int, nilpotency_class: int, exponents: Sequence[int]) -> int:
    """Index of the subgroup generated by g_i^{n_i} z_i in N_{r,c}."""
    values = _require_exponents(_require_positive("rank", rank), exponents)
    return prod(values) ** index_exponent(rank, nilpotency_class)


def layer_index_formula(rank: int, weight: int, exponents: Sequence[int]) -> int:
    """Index contributed by the weight-n layer alone."""
    values = _require_exponents(_require_positive("rank", rank), exponents)
    return prod(values) ** arn(rank, weight)


def lyndon_words(rank: int, length: int) -> Iterator[tuple[int, ...]]:
    """Lyndon words of exactly the given length over letters 1..r (Duval order)."""
    rank = _require_positive("rank", rank)
    length = _require_positive("length", length)
    word = [0]
    while word:
        if len(word) == length:
            yield tuple(letter + 1 for letter in word)
        k = len(word)
        while len(word) < length:
            word.append(word[len(word) - k])
        while word and word[-1] == rank - 1:
            word.pop()
        if word:
            word[-1] += 1


@dataclass(frozen=True)
class BasicCommutator:
    id: int
    weight: int
    multiweight: tuple[int, ...]
    generator: int | None = None
    left: int | None = None
    right: int | None = None

    @property
    def is_leaf(self) -> bool:
        return self.generator is not None


@dataclass(frozen=True)
class HallBasis:
    rank: int
    nilpotency_class: int
    entries: tuple[BasicCommutator, ...]
    _pairs: dict[tuple[int, int], int] = field(default_factory=dict, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, basis_id: int) -> BasicCommutator:
        if basis_id < 1 or basis_id > len(self.entries):
            raise IndexError(f"basis id {basis_id} out of range 1..{len(self.entries)}")
        return self.entries[basis_id - 1]

    def pair_id(self, left: int, right: int) -> int | None:
        return self._pairs.get((left, right))

    def ids_of_weight(self, weight: int) -> range:
        ids = [entry.id for entry in self.entries if entry.weight == weight]
        if not ids:
            return range(0)
        return range(ids[0], ids[-1] + 1)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(entry.weight for entry in self.entries)


def hall_basis_size(rank: int, nilpotency_class: int) -> int:
    return sum(witt_rank(rank, n) for n in range(1, nilpotency_class + 1))


@lru_cache(maxsize=64)
def _build_hall_basis(rank: int, nilpotency_class: int) -> HallBasis:
    entries: list[BasicCommutator] = []
    by_weight: dict[int, list[BasicCommutator]] = {1: []}
    for generator in range(1, rank + 1):
        multiweight = tuple(1 if g == generator else 0 for g in range(1, rank + 1))
        leaf = BasicCommutator(id=generator, weight=1, multiweight=multiweight, generator=generator)
        entries.append(leaf)
        by_weight[1].append(leaf)

    pairs: dict[tuple[int, int], int] = {}
    for weight in range(2, nilpotency_class + 1):
        candidates: list[tuple[int, int]] = []
        for right_weight in range(1, weight):
            for left in by_weight[weight - right_weight]:
                for right in by_weight[right_weight]:
                    if left.id <= right.id:
                        continue
                    if not left.is_leaf and right.id < left.right:
                        continue
                    candidates.append((left.id, right.id))
        candidates.sort(key=lambda pair: (pair[1], pair[0]))

        layer: list[BasicCommutator] = []
        for left_id, right_id in candidates:
            left, right = entries[left_id - 1], entries[right_id - 1]
            commutator = BasicCommutator(
                id=len(entries) + 1,
                weight=weight,
                multiweight=tuple(a + b for a, b in zip(left.multiweight, right.multiweight)),
                left=left_id,
                right=right_id,
            )
            entries.append(commutator)
            layer.append(commutator)
            pairs[(left_id, right_id)] = commutator.id
        by_weight[weight] = layer

    return HallBasis(rank=rank, nilpotency_class=nilpotency_class, entries=tuple(entries), _pairs=pairs)


def hall_basis(rank: int, nilpotency_class: int, *, cap: int | None = None) -> HallBasis:
    """Ordered basic commutators of weight at most c on r generators."""
    rank = _require_positive("rank", rank)
    nilpotency_class = _require_positive("class", nilpotency_class)
    limit = get_basis_cap() if cap is None else cap
    size = hall_basis_size(rank, nilpotency_class)
    if size > limit:
        raise BasisCapExceededError(
            f"Hall basis for r={rank}, c={nilpotency_class} has {size} elements, above the cap of {limit}"
        )
    basis = _build_hall_basis(rank, nilpotency_class)
    LOGGER.debug("Hall basis r=%d c=%d has %d elements", rank, nilpotency_class, len(basis))
    return basis


def weight_count(rank: int, weight: int, generator: int = 1) -> int:
    """Sum of one generator's degree over the weight-n layer of the Hall basis."""
    basis = hall_basis(rank, weight)
    if generator < 1 or generator > basis.rank:
        raise ValueError(f"generator index {generator} out of range 1..{basis.rank}")
    return sum(entry.multiweight[generator - 1] for entry in basis.entries if entry.weight == weight)


def format_commutator(basis: HallBasis, basis_id: int, names: Sequence[str] | None = None) -> str:
    entry = basis.entry(basis_id)
    if entry.is_leaf:
        if names is not None:
            return names[entry.generator - 1]
        return f"x{entry.generator}"
    left = format_commutator(basis, entry.left, names)
    right = format_commutator(basis, entry.right, names)
    return f"[{left},{right}]"
