from __future__ import annotations

import logging
from dataclasses import dataclass
from math import prod
from typing import Sequence

from ..nilpotent.element import GroupElement, generator
from ..nilpotent.homomorphism import Homomorphism, apply_hom, hom_extend
from ..nilpotent.presentation import Presentation, Vector, get_presentation, leading_index
from ..nilpotent.subgroup import Subgroup, contains, induced_sequence


LOGGER = logging.getLogger(__name__)


class VirtualEndomorphismError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class VirtualEndomorphism:
    """Homomorphism f: H -> G on a finite-index subgroup H of N_{r,c}.

    H is generated by h_i = g_i^{n_i} z_i and f(h_i) = images[i].
    ``embedding`` is the isomorphism G -> H sending g_i to h_i.
    """

    presentation: Presentation
    domain: Subgroup
    generators: tuple[GroupElement, ...]
    images: tuple[GroupElement, ...]
    scales: tuple[int, ...]
    embedding: Homomorphism
    image_map: Homomorphism
    _embedded_basis: tuple[Vector, ...]

    @property
    def index(self) -> int:
        return self.domain.index

    def pull_back(self, h: GroupElement) -> GroupElement:
        """The unique y in G with embedding(y) == h."""
        presentation = self.presentation
        vector = h.exponents
        solution = [0] * presentation.size
        while True:
            k = leading_index(vector)
            if k is None:
                return GroupElement(presentation, tuple(solution))
            row = self._embedded_basis[k]
            if vector[k] % row[k]:
                raise VirtualEndomorphismError(f"{h!r} is not in the domain of the virtual endomorphism")
            solution[k] = vector[k] // row[k]
            vector = presentation.multiply(presentation.power(row, -solution[k]), vector)

    def __call__(self, h: GroupElement) -> GroupElement:
        if h.presentation.key != self.presentation.key:
            raise VirtualEndomorphismError(f"{h!r} does not lie in N_{self.presentation.key}")
        return apply_hom(self.image_map, self.pull_back(h))

    def isomorphism_to_domain(self) -> Homomorphism:
        return self.embedding


def _scale_of(g: GroupElement, position: int) -> int | None:
    abelian = g.abelianization()
    expected_zero = all(value == 0 for i, value in enumerate(abelian) if i != position)
    if not expected_zero or abelian[position] < 1:
        return None
    return abelian[position]


def make_virtual_endomorphism(
    domain: Subgroup,
    generators: Sequence[GroupElement],
    images: Sequence[GroupElement],
) -> VirtualEndomorphism:
    presentation = domain.presentation
    gens = tuple(generators)
    targets = tuple(images)
    rank = presentation.rank
    if len(gens) != rank or len(targets) != rank:
        raise VirtualEndomorphismError(
            f"expected {rank} domain generators and {rank} images, got {len(gens)} and {len(targets)}"
        )
    if not domain.is_finite_index:
        raise VirtualEndomorphismError("the domain must have finite index")
    if domain.index < 2:
        raise VirtualEndomorphismError("the domain must be a proper subgroup (index at least 2)")

    scales: list[int] = []
    for position, g in enumerate(gens):
        if g.presentation.key != presentation.key:
            raise VirtualEndomorphismError(f"generator {g!r} does not lie in N_{presentation.key}")
        if not contains(domain, g):
            raise VirtualEndomorphismError(f"generator {position + 1} ({g}) is not in domain")
        scale = _scale_of(g, position)
        if scale is None:
            raise VirtualEndomorphismError(
                f"generator {position + 1} ({g}) is not of the form g_{position + 1}^n z with n >= 1 and z in G'"
            )
        scales.append(scale)
    for image in targets:
        if image.presentation.key != presentation.key:
            raise VirtualEndomorphismError(f"image {image!r} does not lie in N_{presentation.key}")

    embedding = hom_extend(gens, presentation, presentation)
    embedded_basis = tuple(image.exponents for image in embedding.basis_images)
    for k, row in enumerate(embedded_basis):
        if leading_index(row) != k:
            raise VirtualEndomorphismError(f"image of basis element {k + 1} under g_i -> h_i is not triangular")

    generated_index = prod(row[k] for k, row in enumerate(embedded_basis))
    if generated_index != domain.index:
        raise VirtualEndomorphismError(
            f"the distinguished generators span a subgroup of index {generated_index}, not the domain's {domain.index}"
        )

    image_map = hom_extend(targets, presentation, presentation)
    LOGGER.info(
        "Virtual endomorphism on N_%s with scales %s and index %d",
        presentation.key,
        tuple(scales),
        domain.index,
    )
    return VirtualEndomorphism(
        presentation=presentation,
        domain=domain,
        generators=gens,
        images=targets,
        scales=tuple(scales),
        embedding=embedding,
        image_map=image_map,
        _embedded_basis=embedded_basis,
    )


def cyclic_endomorphism(rank: int, nilpotency_class: int, exponents: Sequence[int]) -> VirtualEndomorphism:
    """g_1^{n_1} -> g_r and g_{i+1}^{n_{i+1}} -> g_i on H = <g_i^{n_i}>."""
    presentation = get_presentation(rank, nilpotency_class)
    scales = tuple(int(n) for n in exponents)
    if len(scales) != presentation.rank or any(n < 1 for n in scales):
        raise VirtualEndomorphismError(f"expected {presentation.rank} positive exponents, got {scales}")
    if prod(scales) == 1:
        raise VirtualEndomorphismError("at least one exponent must exceed 1 for a proper subgroup")

    gens = [generator(presentation, i + 1) ** n for i, n in enumerate(scales)]
    images = [generator(presentation, presentation.rank)]
    images += [generator(presentation, i) for i in range(1, presentation.rank)]
    domain = induced_sequence(presentation, gens)
    return make_virtual_endomorphism(domain, gens, images)
