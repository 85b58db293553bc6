"""
Built-in theorem registration
"""

import logging

from ..core.registry import theorem_registry
from .a31b import A31bDualTheorem, A31bTheorem
from .block_components import BlockComponentTheorem
from .hooks import HookTheorem, PowerHookTheorem
from .staircase import StaircaseTheorem

logger = logging.getLogger(__name__)

BUILT_IN_THEOREMS = [
    (StaircaseTheorem, []),
    (HookTheorem, []),
    (PowerHookTheorem, ["powers", "example63"]),
    (A31bTheorem, []),
    (A31bDualTheorem, ["a31b-dual"]),
    (BlockComponentTheorem, ["blockcomp"]),
]


def register_built_in_theorems() -> int:
    """Register every built-in theorem; returns how many registered"""
    registered = 0
    for theorem_class, aliases in BUILT_IN_THEOREMS:
        if theorem_registry.register_theorem(theorem_class, theorem_class.get_metadata(), aliases):
            registered += 1

    errors = theorem_registry.validate_dependencies()
    for name, problems in errors.items():
        logger.error(f"theorem '{name}': {'; '.join(problems)}")

    logger.debug(f"registered {registered} built-in theorems")
    return registered
