from collections import Counter
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from combinatorics.partitions import Partition, render_partition


class TheoremFamily(str, Enum):
    """Decomposition families"""
    STAIRCASE = "staircase"              # Sp(a, m-1, ..., 2, 1^{b-m+2})
    HOOK = "hook"                        # Sp(a, 1^b)
    A31B = "a31b"                        # Sp(a, 3, 1^{b-1}) and its conjugate
    BLOCK_COMPONENT = "block_component"  # σ_m-core component of M(a, b, ...)


class TheoremMetadata(BaseModel):
    """Theorem metadata"""
    name: str = Field(..., min_length=1, max_length=100, description="registry name")
    display_name: str = Field(..., min_length=1, max_length=100, description="human-readable name")
    description: str = Field(..., min_length=1, max_length=500, description="what the theorem decomposes")
    family: TheoremFamily = Field(..., description="decomposition family")

    parameters: List[str] = Field(default_factory=list, description="required integer parameters")
    defaults: Dict[str, int] = Field(default_factory=dict, description="optional parameters with defaults")
    fixed: Dict[str, int] = Field(default_factory=dict, description="parameters pinned by the theorem")
    dependencies: List[str] = Field(default_factory=list, description="theorems this one delegates to")

    cache_results: bool = Field(default=True, description="memoize decompositions by parameters")
    enabled: bool = Field(default=True)


class Summand(BaseModel):
    young: List[int] = Field(..., description="Young module label")
    mult: int = Field(default=1, ge=1, description="multiplicity")


class Decomposition(BaseModel):
    """
    Specht (or permutation-module block) decomposition into Young module labels.

    Summands are kept sorted by descending lexicographic order of label.
    """
    theorem: str = Field(..., description="registry name of the producing theorem")
    parameters: Dict[str, int] = Field(default_factory=dict, description="provenance parameters")
    specht: Optional[List[int]] = Field(None, description="Specht label; null for block components")
    permutation: Optional[List[int]] = Field(None, description="permutation module composition")
    core: Optional[List[int]] = Field(None, description="block core")
    summands: List[Summand] = Field(default_factory=list)

    @classmethod
    def build(
        cls,
        theorem: str,
        parameters: Dict[str, int],
        labels: List[Partition],
        specht: Optional[Partition] = None,
        permutation: Optional[List[int]] = None,
        core: Optional[Partition] = None,
    ) -> "Decomposition":
        """Collect labels into sorted summands, merging repeats into multiplicities"""
        counts = Counter(label.parts for label in labels)
        summands = [
            Summand(young=list(parts), mult=mult)
            for parts, mult in sorted(counts.items(), reverse=True)
        ]
        return cls(
            theorem=theorem,
            parameters=dict(parameters),
            specht=list(specht.parts) if specht is not None else None,
            permutation=list(permutation) if permutation is not None else None,
            core=list(core.parts) if core is not None else None,
            summands=summands,
        )

    @property
    def specht_label(self) -> Optional[Partition]:
        return Partition(tuple(self.specht)) if self.specht is not None else None

    def labels(self) -> List[Partition]:
        return [Partition(tuple(s.young)) for s in self.summands]

    def multiset(self) -> Counter:
        return Counter({tuple(s.young): s.mult for s in self.summands})

    def render(self) -> str:
        if self.specht is not None:
            left = f"Sp({render_partition(self.specht)})"
        else:
            left = f"M({render_partition(self.permutation or [])})"
            if self.core is not None:
                left += f" [core ({render_partition(self.core)})]"
        if not self.summands:
            return f"{left} = 0"
        right = " + ".join(
            f"Y({render_partition(s.young)})" + (f"^({s.mult})" if s.mult > 1 else "")
            for s in self.summands
        )
        return f"{left} = {right}"

    def to_dict(self) -> Dict[str, Any]:
        data = self.model_dump()
        for key in ("permutation", "core"):
            if data[key] is None:
                del data[key]
        return data


class GridFailure(BaseModel):
    parameters: Dict[str, int] = Field(default_factory=dict)
    message: str = Field(..., description="what disagreed")


class GridReport(BaseModel):
    """Outcome of a verification over a parameter grid"""
    name: str = Field(..., description="verification name")
    total: int = Field(default=0, ge=0)
    passed: int = Field(default=0, ge=0)
    failures: List[GridFailure] = Field(default_factory=list)
    errors: List[GridFailure] = Field(default_factory=list, description="cases that raised")
    elapsed: float = Field(default=0.0, ge=0.0, description="wall time in seconds")

    @property
    def ok(self) -> bool:
        return self.passed == self.total and not self.failures and not self.errors

    def render(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        lines = [f"{self.name}: {self.passed}/{self.total} passed ({status}, {self.elapsed:.2f}s)"]
        for failure in self.failures + self.errors:
            params = ", ".join(f"{k}={v}" for k, v in failure.parameters.items())
            lines.append(f"  {params}: {failure.message}")
        return "\n".join(lines)
