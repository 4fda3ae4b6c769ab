import logging
import os


LOGGER = logging.getLogger(__name__)

DEFAULT_BASIS_CAP = 1_000_000
DEFAULT_PORTRAIT_NODE_CAP = 100_000
DEFAULT_STATE_CUTOFF = 100_000
SPECTRAL_TOLERANCE = 1e-9


def get_env_bool(name: str, default: bool = False) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on"}


def get_env_int(name: str, default: int, *, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        parsed = int(raw.strip().replace("_", ""))
    except ValueError:
        LOGGER.warning("Ignoring malformed %s=%r; using %d", name, raw, default)
        return default
    if parsed < minimum:
        LOGGER.warning("Ignoring %s=%d below minimum %d; using %d", name, parsed, minimum, default)
        return default
    return parsed


_BASIS_CAP = get_env_int("SELFSIM_BASIS_CAP", DEFAULT_BASIS_CAP)
_PORTRAIT_NODE_CAP = get_env_int("SELFSIM_PORTRAIT_NODE_CAP", DEFAULT_PORTRAIT_NODE_CAP)
_STATE_CUTOFF = get_env_int("SELFSIM_STATE_CUTOFF", DEFAULT_STATE_CUTOFF)


def get_basis_cap() -> int:
    return _BASIS_CAP


def set_basis_cap(cap: int) -> int:
    global _BASIS_CAP
    if cap < 1:
        raise ValueError("Basis cap must be positive")
    _BASIS_CAP = int(cap)
    return _BASIS_CAP


def reload_basis_cap() -> int:
    """Re-read SELFSIM_BASIS_CAP, e.g. after the CLI environment changed."""
    return set_basis_cap(get_env_int("SELFSIM_BASIS_CAP", DEFAULT_BASIS_CAP))


def get_portrait_node_cap() -> int:
    return _PORTRAIT_NODE_CAP


def set_portrait_node_cap(cap: int) -> int:
    global _PORTRAIT_NODE_CAP
    if cap < 1:
        raise ValueError("Portrait node cap must be positive")
    _PORTRAIT_NODE_CAP = int(cap)
    return _PORTRAIT_NODE_CAP


def get_state_cutoff() -> int:
    return _STATE_CUTOFF
