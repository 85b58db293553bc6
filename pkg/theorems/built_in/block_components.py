"""
σ_m-core block component of the permutation module M(a, b, (m-2)(l-1), ..., l-1)
"""

import logging
from typing import Dict, List, Optional

from combinatorics.partitions import Partition, add_scaled, staircase
from combinatorics.special import SpecialParams, enumerate_special_two_part

from ..core.base import TheoremBase
from ..core.models import Decomposition, TheoremFamily, TheoremMetadata
from ..core.registry import theorem_registry

logger = logging.getLogger(__name__)


def block_permutation_label(m: int, a: int, b: int, l: int) -> List[int]:
    return [a, b] + [j * (l - 1) for j in range(m - 2, 0, -1)]


class BlockComponentTheorem(TheoremBase):
    """
    The component of M(a, b, (m-2)(l-1), ..., l-1) with core σ_m is ⊕_μ Y(σ_m + lμ),
    over μ = (c, d) with c + d = u + v and (c - d, u - v) p-special, where
    lu = a - m(l-1) and lv = b - (m-1)(l-1). The same labels index the
    injective summands I(σ_m + lμ) of S^a E ⊗ Λ^b E ⊗ ... in the σ_m block.
    """

    @classmethod
    def get_metadata(cls) -> TheoremMetadata:
        return TheoremMetadata(
            name="block-component",
            display_name="Staircase block components",
            description="Young module labels of the σ_m-core block component of a permutation module",
            family=TheoremFamily.BLOCK_COMPONENT,
            parameters=["m", "a", "b"],
            defaults={"l": 2, "p": 2},
        )

    def validate(self, params: Dict[str, int]) -> List[str]:
        SpecialParams(l=params["l"], p=params["p"])
        m, a, b, l = params["m"], params["a"], params["b"], params["l"]
        violations = []
        if m < 2:
            violations.append(f"m must be at least 2 (m={m})")
        if a < m * (l - 1):
            violations.append(f"a must be at least m(l-1)={m * (l - 1)} (a={a})")
        if b < (m - 1) * (l - 1):
            violations.append(f"b must be at least (m-1)(l-1)={(m - 1) * (l - 1)} (b={b})")
        if (a + m) % l:
            violations.append(f"a+m must be divisible by l (a={a}, m={m}, l={l})")
        if (b + m) % l != 1 % l:
            violations.append(f"b+m must be 1 mod l (b={b}, m={m}, l={l})")
        return violations

    def expected_core(self, params: Dict[str, int]) -> Optional[Partition]:
        return staircase(params["m"], params["l"])

    def compute(self, params: Dict[str, int]) -> Decomposition:
        m, a, b, l, p = params["m"], params["a"], params["b"], params["l"], params["p"]
        u = (a - m * (l - 1)) // l
        v = (b - (m - 1) * (l - 1)) // l
        core = staircase(m, l)
        labels = [add_scaled(core, l, mu.parts) for mu in enumerate_special_two_part(u, v, p)]
        return Decomposition.build(
            theorem=self.metadata.name,
            parameters=params,
            labels=labels,
            permutation=block_permutation_label(m, a, b, l),
            core=core,
        )


def block_component_labels(m: int, a: int, b: int, params: Optional[SpecialParams] = None) -> Decomposition:
    """
    Young module labels of the σ_m-core component of M(a, b, (m-2)(l-1), ..., l-1).

    Raises:
        PreconditionError: a failed range or congruence condition
        DomainError: invalid l or p
    """
    params = params or SpecialParams()
    return theorem_registry.require_theorem("block-component").decompose(
        m=m, a=a, b=b, l=params.l, p=params.p
    )
