"""Core theorem system components"""

from .base import TheoremBase
from .executor import GridExecutor
from .models import Decomposition, GridFailure, GridReport, Summand, TheoremFamily, TheoremMetadata
from .registry import TheoremRegistry, theorem_registry

__all__ = [
    "TheoremBase",
    "TheoremMetadata",
    "TheoremFamily",
    "Decomposition",
    "Summand",
    "GridReport",
    "GridFailure",
    "TheoremRegistry",
    "theorem_registry",
    "GridExecutor",
]
