"""
Configuration package.

Runtime settings and the preset worked examples.
"""

from .preset_examples import PresetExample, get_preset_examples
from .settings import GridBounds, Settings, get_settings

__all__ = ["Settings", "GridBounds", "get_settings", "PresetExample", "get_preset_examples"]
