"""Built-in decomposition theorems"""

from .a31b import decompose_a31b, decompose_a31b_dual
from .block_components import block_component_labels
from .hooks import decompose_hook, decompose_power_hook
from .registry_setup import register_built_in_theorems
from .staircase import decompose_staircase

__all__ = [
    "decompose_staircase",
    "decompose_hook",
    "decompose_power_hook",
    "decompose_a31b",
    "decompose_a31b_dual",
    "block_component_labels",
    "register_built_in_theorems",
]
