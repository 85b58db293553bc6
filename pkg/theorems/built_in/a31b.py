"""
The (a, 3, 1^{b-1}) family in characteristic 2, and its conjugate (b+1, 2, 2, 1^{a-3})

With a = 2(u+1) and b = 2v+1 the summands are Y(σ_2 + 2μ) for two families:
  μ = (μ_1, μ_2, 1) with μ_1 + μ_2 = u + v and (μ_1 - μ_2, u - v) 2-special;
  ρ = σ_2 + 2ρ̄ with 2(ρ̄_1 + ρ̄_2) = u + v - 2 and (2(ρ̄_1 - ρ̄_2), u - v - 2) 2-special.
"""

import logging
from typing import Dict, List, Optional

from combinatorics.characters import a31b_violations
from combinatorics.errors import ConsistencyError
from combinatorics.partitions import Partition, add_scaled, conjugate, staircase
from combinatorics.special import is_p_special

from ..core.base import TheoremBase
from ..core.models import Decomposition, TheoremFamily, TheoremMetadata
from ..core.registry import theorem_registry

logger = logging.getLogger(__name__)


def a31b_uv(a: int, b: int):
    return a // 2 - 1, (b - 1) // 2


def three_part_family(u: int, v: int) -> List[Partition]:
    """μ = (μ_1, μ_2, 1), μ_1 ≥ μ_2 ≥ 1, μ_1 + μ_2 = u + v, (μ_1 - μ_2, u - v) 2-special"""
    n = u + v
    family = []
    for first in range(n - 1, (n + 1) // 2 - 1, -1):
        second = n - first
        if second >= 1 and is_p_special(first - second, u - v, 2):
            family.append(Partition((first, second, 1)))
    return family


def shifted_two_part_family(u: int, v: int) -> List[Partition]:
    """ρ = σ_2 + 2ρ̄ with 2|ρ̄| = u + v - 2 and (2(ρ̄_1 - ρ̄_2), u - v - 2) 2-special"""
    total = u + v - 2
    if total < 0 or total % 2:
        return []
    half = total // 2
    family = []
    for first in range(half, (half + 1) // 2 - 1, -1):
        second = half - first
        if is_p_special(2 * (first - second), u - v - 2, 2):
            family.append(add_scaled(staircase(2, 2), 2, (first, second)))
    return family


def a31b_summand_labels(a: int, b: int) -> List[Partition]:
    u, v = a31b_uv(a, b)
    core = staircase(2, 2)
    return [
        add_scaled(core, 2, mu.parts)
        for mu in three_part_family(u, v) + shifted_two_part_family(u, v)
    ]


class A31bTheorem(TheoremBase):
    """Sp(a, 3, 1^{b-1}) = ⊕_μ Y(σ_2 + 2μ) ⊕ ⊕_ρ Y(σ_2 + 2ρ) for a ≡ 2 mod 4, b odd"""

    @classmethod
    def get_metadata(cls) -> TheoremMetadata:
        return TheoremMetadata(
            name="a31b",
            display_name="Specht modules (a, 3, 1^{b-1})",
            description="Young module summands of Sp(a, 3, 1^{b-1}) in characteristic 2",
            family=TheoremFamily.A31B,
            parameters=["a", "b"],
            fixed={"l": 2, "p": 2},
        )

    def validate(self, params: Dict[str, int]) -> List[str]:
        return a31b_violations(params["a"], params["b"])

    def expected_core(self, params: Dict[str, int]) -> Optional[Partition]:
        return staircase(2, 2)

    def compute(self, params: Dict[str, int]) -> Decomposition:
        a, b = params["a"], params["b"]
        return Decomposition.build(
            theorem=self.metadata.name,
            parameters=params,
            labels=a31b_summand_labels(a, b),
            specht=Partition((a, 3) + (1,) * (b - 1)),
        )


class A31bDualTheorem(TheoremBase):
    """Sp(b+1, 2, 2, 1^{a-3}), the conjugate label, with the same Young summands"""

    @classmethod
    def get_metadata(cls) -> TheoremMetadata:
        return TheoremMetadata(
            name="dual-a31b",
            display_name="Specht modules (b+1, 2, 2, 1^{a-3})",
            description="Young module summands of Sp(b+1, 2, 2, 1^{a-3}) in characteristic 2",
            family=TheoremFamily.A31B,
            parameters=["a", "b"],
            fixed={"l": 2, "p": 2},
            dependencies=["a31b"],
        )

    def validate(self, params: Dict[str, int]) -> List[str]:
        return a31b_violations(params["a"], params["b"])

    def expected_core(self, params: Dict[str, int]) -> Optional[Partition]:
        return staircase(2, 2)

    def compute(self, params: Dict[str, int]) -> Decomposition:
        a, b = params["a"], params["b"]
        primal = theorem_registry.require_theorem("a31b").decompose(a=a, b=b)
        specht = Partition((b + 1, 2, 2) + (1,) * (a - 3))
        # Sp(λ)* = Sp(λ'), and Young modules are self-dual
        if specht != conjugate(primal.specht_label):
            raise ConsistencyError(f"{specht} is not the conjugate of {primal.specht_label}")
        return Decomposition.build(
            theorem=self.metadata.name,
            parameters=params,
            labels=primal.labels(),
            specht=specht,
        )


def decompose_a31b(a: int, b: int) -> Decomposition:
    """
    Young module summands of Sp(a, 3, 1^{b-1}) in characteristic 2.

    Raises:
        PreconditionError: a not even ≥ 4, a ≡ 0 mod 4, or b not odd ≥ 3
    """
    return theorem_registry.require_theorem("a31b").decompose(a=a, b=b)


def decompose_a31b_dual(a: int, b: int) -> Decomposition:
    return theorem_registry.require_theorem("dual-a31b").decompose(a=a, b=b)
