"""
Specht module decompositions at q = -1

- Theorem registry with one class per decomposition family
- Decompositions with provenance and JSON/text rendering
- Character-level and multiset verifications over parameter grids
"""

from .built_in import (
    block_component_labels,
    decompose_a31b,
    decompose_a31b_dual,
    decompose_hook,
    decompose_power_hook,
    decompose_staircase,
    register_built_in_theorems,
)
from .core import Decomposition, GridExecutor, GridReport, TheoremBase, TheoremMetadata, theorem_registry

register_built_in_theorems()

__version__ = "1.0.0"
__all__ = [
    "Decomposition",
    "GridReport",
    "GridExecutor",
    "TheoremBase",
    "TheoremMetadata",
    "theorem_registry",
    "decompose_staircase",
    "decompose_hook",
    "decompose_power_hook",
    "decompose_a31b",
    "decompose_a31b_dual",
    "block_component_labels",
]
