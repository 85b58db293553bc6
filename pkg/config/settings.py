"""
Settings for the command line and the verification grids
"""

from functools import lru_cache
from typing import List, Tuple

from pydantic import BaseModel, Field


class GridBounds(BaseModel):
    """Parameter ranges of the verification grids"""
    core_identity_max_m: int = Field(default=5, ge=2, description="largest m; a ≤ m+12, b ≤ m+11")
    core_identity_a_span: int = Field(default=12, ge=0)
    core_identity_b_span: int = Field(default=11, ge=0)
    a31b_max_a: int = Field(default=40, ge=6)
    a31b_max_b: int = Field(default=39, ge=3)
    a31b_weight_max_a: int = Field(default=30, ge=6)
    a31b_weight_max_b: int = Field(default=29, ge=3)
    rank_two_max_c: int = Field(default=60, ge=0)
    rank_two_params: List[Tuple[int, int]] = Field(
        default_factory=lambda: [(2, 0), (2, 2), (2, 3), (3, 2), (3, 0)],
        description="(l, p) pairs",
    )
    special_max_r: int = Field(default=500, ge=0)
    special_primes: List[int] = Field(default_factory=lambda: [2, 3, 5])
    power_hook_max_k: int = Field(default=10, ge=1)


class Settings(BaseModel):
    """Runtime defaults; nothing is read from the environment"""
    default_l: int = Field(default=2, ge=2, description="quantum order l")
    default_p: int = Field(default=2, ge=0, description="characteristic p (0 or prime)")
    log_level: str = Field(default="WARNING", description="root logging level")
    grid_workers: int = Field(default=1, ge=1, le=64, description="threads for grid verifications")
    grids: GridBounds = Field(default_factory=GridBounds)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
