from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .element import GroupElement, identity
from .presentation import Presentation


class HomomorphismError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Homomorphism:
    """N_{r,c} -> N_{r,c'} determined by the images of the free generators (c' <= c)."""

    source: Presentation
    target: Presentation
    images: tuple[GroupElement, ...]
    basis_images: tuple[GroupElement, ...] = field(repr=False)

    def __call__(self, a: GroupElement) -> GroupElement:
        return apply_hom(self, a)


def hom_extend(
    images: Sequence[GroupElement],
    source: Presentation,
    target: Presentation | None = None,
) -> Homomorphism:
    """Extend generator images to a homomorphism; every map of generators extends uniquely."""
    values = tuple(images)
    if target is None:
        if not values:
            raise HomomorphismError("cannot infer the target group from an empty image list")
        target = values[0].presentation
    if len(values) != source.rank:
        raise HomomorphismError(f"expected {source.rank} generator images, got {len(values)}")
    if target.rank != source.rank:
        raise HomomorphismError(f"source rank {source.rank} differs from target rank {target.rank}")
    if target.nilpotency_class > source.nilpotency_class:
        raise HomomorphismError(
            f"target class {target.nilpotency_class} exceeds source class {source.nilpotency_class}"
        )
    for image in values:
        if image.presentation.key != target.key:
            raise HomomorphismError(f"image {image!r} does not lie in N_{target.key}")
    basis_images: list[GroupElement] = []
    for entry in source.basis.entries:
        if entry.is_leaf:
            basis_images.append(values[entry.generator - 1])
        else:
            basis_images.append(basis_images[entry.left - 1].commutator(basis_images[entry.right - 1]))
    return Homomorphism(source=source, target=target, images=values, basis_images=tuple(basis_images))


def apply_hom(homomorphism: Homomorphism, a: GroupElement) -> GroupElement:
    if a.presentation.key != homomorphism.source.key:
        raise HomomorphismError(f"element of N_{a.presentation.key} is outside the source N_{homomorphism.source.key}")
    result = identity(homomorphism.target)
    for image, exponent in zip(homomorphism.basis_images, a.exponents):
        if exponent:
            result = result * image**exponent
    return result
