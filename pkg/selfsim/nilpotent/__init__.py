from .element import (
    GroupElement,
    basis_element,
    default_names,
    element,
    element_weight,
    format_element,
    generator,
    identity,
    random_derived_element,
    random_element,
)
from .homomorphism import Homomorphism, HomomorphismError, apply_hom, hom_extend
from .presentation import Presentation, PresentationMismatchError, get_presentation
from .subgroup import (
    InfiniteIndexError,
    Subgroup,
    SubgroupConsistencyError,
    TransversalError,
    canonical_rep,
    contains,
    induced_sequence,
    isomorphic_subgroup,
    layer_pivots,
    transversal,
    validate_transversal,
)
from .words import ExpressionSyntaxError, Word, collect, evaluate, parse_word

__all__ = [
    "ExpressionSyntaxError",
    "GroupElement",
    "Homomorphism",
    "HomomorphismError",
    "InfiniteIndexError",
    "Presentation",
    "PresentationMismatchError",
    "Subgroup",
    "SubgroupConsistencyError",
    "TransversalError",
    "Word",
    "apply_hom",
    "basis_element",
    "canonical_rep",
    "collect",
    "contains",
    "default_names",
    "element",
    "element_weight",
    "evaluate",
    "format_element",
    "generator",
    "get_presentation",
    "hom_extend",
    "identity",
    "induced_sequence",
    "isomorphic_subgroup",
    "layer_pivots",
    "parse_word",
    "random_derived_element",
    "random_element",
    "transversal",
    "validate_transversal",
]
