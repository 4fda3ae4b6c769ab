from .automaton import (
    Automaton,
    AutomatonState,
    StateClosure,
    automaton_act,
    automaton_from_closure,
    faithfulness_witness,
    is_level1_transitive,
    state_closure,
)
from .endomorphism import (
    VirtualEndomorphism,
    VirtualEndomorphismError,
    cyclic_endomorphism,
    make_virtual_endomorphism,
)
from .representation import (
    Decomposition,
    DecompositionError,
    LetterRangeError,
    Portrait,
    PortraitCapExceededError,
    SelfSimilarRep,
    TreeAutomorphism,
    act,
    decompose,
    format_cycles,
    portrait,
)
from .spectral import (
    SingularLatticeError,
    SpectralReport,
    abelianized_matrix,
    abelianized_matrix_from,
    characteristic_polynomial,
    classify_radius,
    companion_matrix,
    spectral_radius,
    spectral_report,
)

__all__ = [
    "Automaton",
    "AutomatonState",
    "Decomposition",
    "DecompositionError",
    "LetterRangeError",
    "Portrait",
    "PortraitCapExceededError",
    "SelfSimilarRep",
    "SingularLatticeError",
    "SpectralReport",
    "StateClosure",
    "TreeAutomorphism",
    "VirtualEndomorphism",
    "VirtualEndomorphismError",
    "abelianized_matrix",
    "abelianized_matrix_from",
    "act",
    "automaton_act",
    "automaton_from_closure",
    "characteristic_polynomial",
    "classify_radius",
    "companion_matrix",
    "cyclic_endomorphism",
    "decompose",
    "faithfulness_witness",
    "format_cycles",
    "is_level1_transitive",
    "make_virtual_endomorphism",
    "portrait",
    "spectral_radius",
    "spectral_report",
    "state_closure",
]
