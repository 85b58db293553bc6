"""
Hook family: Sp(a, 1^b) at l = 2, and the power-of-two hooks Sp(2^k + 2, 1^{2^k - 1})
"""

import logging
from typing import Dict, List, Optional

from combinatorics.errors import ConsistencyError
from combinatorics.partitions import Partition, staircase
from combinatorics.special import check_characteristic

from ..core.base import TheoremBase
from ..core.models import Decomposition, TheoremFamily, TheoremMetadata
from ..core.registry import theorem_registry
from .staircase import staircase_summand_labels

logger = logging.getLogger(__name__)


class HookTheorem(TheoremBase):
    """
    Sp(a, 1^b) for a, b of opposite parity.

    a even, b odd: core σ_2 with u = (a-2)/2, v = (b-1)/2 (the m = 2 staircase).
    a odd, b even: core σ_1 with u = (a-1)/2, v = b/2.
    """

    @classmethod
    def get_metadata(cls) -> TheoremMetadata:
        return TheoremMetadata(
            name="hook",
            display_name="Hook Specht modules",
            description="Young module summands of Sp(a, 1^b) for a, b of opposite parity",
            family=TheoremFamily.HOOK,
            parameters=["a", "b"],
            defaults={"p": 2},
            fixed={"l": 2},
        )

    def validate(self, params: Dict[str, int]) -> List[str]:
        check_characteristic(params["p"])
        a, b = params["a"], params["b"]
        violations = []
        if a < 1:
            violations.append(f"a must be at least 1 (a={a})")
        if b < 1:
            violations.append(f"b must be at least 1 (b={b})")
        if (a - b) % 2 == 0:
            violations.append(f"a and b must have opposite parity (a={a}, b={b})")
        return violations

    def expected_core(self, params: Dict[str, int]) -> Optional[Partition]:
        return staircase(2 if params["a"] % 2 == 0 else 1, 2)

    def compute(self, params: Dict[str, int]) -> Decomposition:
        a, b, p = params["a"], params["b"], params["p"]
        if a % 2 == 0:
            m, u, v = 2, (a - 2) // 2, (b - 1) // 2
        else:
            m, u, v = 1, (a - 1) // 2, b // 2
        return Decomposition.build(
            theorem=self.metadata.name,
            parameters=params,
            labels=staircase_summand_labels(m, u, v, p),
            specht=Partition((a,) + (1,) * b),
        )


def power_hook_closed_form(k: int) -> List[Partition]:
    """Y(2^k + 2^j, 2^k - 2^j + 1) for j = 1..k"""
    return [Partition((2 ** k + 2 ** j, 2 ** k - 2 ** j + 1)) for j in range(1, k + 1)]


class PowerHookTheorem(TheoremBase):
    """
    Sp(2^k + 2, 1^{2^k - 1}) has exactly k summands, so the number of
    indecomposable summands of a Specht module is unbounded.
    """

    @classmethod
    def get_metadata(cls) -> TheoremMetadata:
        return TheoremMetadata(
            name="power-hook",
            display_name="Power-of-two hooks",
            description="Sp(2^k + 2, 1^{2^k - 1}) computed as a staircase and checked against its closed form",
            family=TheoremFamily.HOOK,
            parameters=["k"],
            fixed={"l": 2, "p": 2},
            dependencies=["staircase"],
        )

    def validate(self, params: Dict[str, int]) -> List[str]:
        k = params["k"]
        return [] if k >= 1 else [f"k must be at least 1 (k={k})"]

    def expected_core(self, params: Dict[str, int]) -> Optional[Partition]:
        return staircase(2, 2)

    def compute(self, params: Dict[str, int]) -> Decomposition:
        k = params["k"]
        a, b = 2 ** k + 2, 2 ** k - 1
        computed = theorem_registry.require_theorem("staircase").decompose(m=2, a=a, b=b, p=2)
        closed = sorted((label.parts for label in power_hook_closed_form(k)), reverse=True)
        if [label.parts for label in computed.labels()] != closed:
            raise ConsistencyError(
                f"power hook k={k}: staircase gives {[str(x) for x in computed.labels()]}, "
                f"closed form gives {[str(Partition(x)) for x in closed]}"
            )
        return Decomposition.build(
            theorem=self.metadata.name,
            parameters={**params, "m": 2, "a": a, "b": b},
            labels=computed.labels(),
            specht=computed.specht_label,
        )


def decompose_hook(a: int, b: int, p: int = 2) -> Decomposition:
    """
    Young module summands of Sp(a, 1^b).

    Raises:
        PreconditionError: a, b < 1 or a ≡ b (mod 2)
    """
    return theorem_registry.require_theorem("hook").decompose(a=a, b=b, p=p)


def decompose_power_hook(k: int) -> Decomposition:
    """
    Sp(2^k + 2, 1^{2^k - 1}) via the staircase theorem, cross-checked with the closed form.

    Raises:
        PreconditionError: k < 1
        ConsistencyError: the two lists differ
    """
    return theorem_registry.require_theorem("power-hook").decompose(k=k)
