"""Free nilpotent groups N_{r,c} and their self-similar representations."""

from .calculus import (
    BasisCapExceededError,
    HallBasis,
    hall_basis,
    index_exponent,
    subgroup_index_formula,
    weight_count,
    witt_multirank,
    witt_rank,
)
from .nilpotent import GroupElement, Presentation, evaluate, get_presentation
from .selfsimilar import SelfSimilarRep, cyclic_endomorphism

__version__ = "0.1.0"

__all__ = [
    "BasisCapExceededError",
    "GroupElement",
    "HallBasis",
    "Presentation",
    "SelfSimilarRep",
    "cyclic_endomorphism",
    "evaluate",
    "get_presentation",
    "hall_basis",
    "index_exponent",
    "subgroup_index_formula",
    "weight_count",
    "witt_multirank",
    "witt_rank",
]
