"""
Staircase family: Sp(a, m-1, ..., 2, 1^{b-m+2}) at l = 2
"""

import logging
from typing import Dict, List, Optional

from combinatorics.partitions import Partition, add_scaled, staircase
from combinatorics.special import check_characteristic, enumerate_special_two_part

from ..core.base import TheoremBase
from ..core.models import Decomposition, TheoremFamily, TheoremMetadata
from ..core.registry import theorem_registry

logger = logging.getLogger(__name__)


def staircase_specht_label(m: int, a: int, b: int) -> Partition:
    """(a, m-1, m-2, ..., 2, 1^{b-m+2})"""
    return Partition((a,) + tuple(range(m - 1, 1, -1)) + (1,) * (b - m + 2))


def staircase_summand_labels(m: int, u: int, v: int, p: int) -> List[Partition]:
    """σ_m + 2μ over μ = (c, d) with c + d = u + v and (c - d, u - v) p-special"""
    core = staircase(m, 2)
    return [add_scaled(core, 2, mu.parts) for mu in enumerate_special_two_part(u, v, p)]


class StaircaseTheorem(TheoremBase):
    """Sp(a, m-1, ..., 2, 1^{b-m+2}) = ⊕_μ Y(σ_m + 2μ)"""

    @classmethod
    def get_metadata(cls) -> TheoremMetadata:
        return TheoremMetadata(
            name="staircase",
            display_name="Staircase Specht modules",
            description="Young module summands of Sp(a, m-1, ..., 2, 1^{b-m+2}) at q = -1",
            family=TheoremFamily.STAIRCASE,
            parameters=["m", "a", "b"],
            defaults={"p": 2},
            fixed={"l": 2},
        )

    def validate(self, params: Dict[str, int]) -> List[str]:
        check_characteristic(params["p"])
        m, a, b = params["m"], params["a"], params["b"]
        violations = []
        if m < 2:
            violations.append(f"m must be at least 2 (m={m})")
        if a < m:
            violations.append(f"a must be at least m (a={a}, m={m})")
        if b < m - 1:
            violations.append(f"b must be at least m-1 (b={b}, m={m})")
        if (a - m) % 2:
            violations.append(f"a-m must be even (a={a}, m={m})")
        if (b - m) % 2 == 0:
            violations.append(f"b-m must be odd (b={b}, m={m})")
        return violations

    def expected_core(self, params: Dict[str, int]) -> Optional[Partition]:
        return staircase(params["m"], 2)

    def compute(self, params: Dict[str, int]) -> Decomposition:
        m, a, b, p = params["m"], params["a"], params["b"], params["p"]
        u, v = (a - m) // 2, (b - m + 1) // 2
        return Decomposition.build(
            theorem=self.metadata.name,
            parameters=params,
            labels=staircase_summand_labels(m, u, v, p),
            specht=staircase_specht_label(m, a, b),
        )


def decompose_staircase(m: int, a: int, b: int, p: int = 2) -> Decomposition:
    """
    Young module summands of Sp(a, m-1, ..., 2, 1^{b-m+2}).

    Raises:
        PreconditionError: a ≥ m, b ≥ m-1, a-m even or b-m odd fails
        DomainError: p neither 0 nor prime
    """
    return theorem_registry.require_theorem("staircase").decompose(m=m, a=a, b=b, p=p)
