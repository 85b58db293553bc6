from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class PresetExample(BaseModel):
    """A worked decomposition with its expected answer"""
    title: str = Field(..., description="short description")
    theorem: str = Field(..., description="registry name of the theorem")
    parameters: Dict[str, int] = Field(default_factory=dict)
    specht: Optional[List[int]] = Field(None, description="expected Specht label")
    young: List[List[int]] = Field(default_factory=list, description="expected Young labels, any order")


def get_preset_examples() -> List[PresetExample]:
    """The worked examples, each replayable through the theorem registry"""

    power_hooks = [
        PresetExample(
            title=f"Sp(2^{k}+2, 1^(2^{k}-1)) has {k} summands",
            theorem="power-hook",
            parameters={"k": k},
            specht=[2 ** k + 2] + [1] * (2 ** k - 1),
            young=[[2 ** k + 2 ** j, 2 ** k - 2 ** j + 1] for j in range(1, k + 1)],
        )
        for k in (1, 2, 3)
    ]

    return power_hooks + [
        PresetExample(
            title="Sp(6,1^3) as a staircase with m = 2",
            theorem="staircase",
            parameters={"m": 2, "a": 6, "b": 3, "p": 2},
            specht=[6, 1, 1, 1],
            young=[[6, 3], [8, 1]],
        ),
        PresetExample(
            title="Sp(4,1^3) is a single Young module",
            theorem="staircase",
            parameters={"m": 2, "a": 4, "b": 3, "p": 2},
            specht=[4, 1, 1, 1],
            young=[[4, 3]],
        ),
        PresetExample(
            title="Sp(3,2,1) is Young",
            theorem="staircase",
            parameters={"m": 3, "a": 3, "b": 2, "p": 2},
            specht=[3, 2, 1],
            young=[[3, 2, 1]],
        ),
        PresetExample(
            title="Sp(3,1,1) with a odd",
            theorem="hook",
            parameters={"a": 3, "b": 2, "p": 2},
            specht=[3, 1, 1],
            young=[[3, 2]],
        ),
        PresetExample(
            title="Sp(1,1,1) in characteristic 0",
            theorem="hook",
            parameters={"a": 1, "b": 2, "p": 0},
            specht=[1, 1, 1],
            young=[[3]],
        ),
        PresetExample(
            title="Sp(14,3,1^8)",
            theorem="a31b",
            parameters={"a": 14, "b": 9},
            specht=[14, 3] + [1] * 8,
            young=[[14, 9, 2], [18, 5, 2], [14, 11]],
        ),
        PresetExample(
            title="Sp(6,3,1^2)",
            theorem="a31b",
            parameters={"a": 6, "b": 3},
            specht=[6, 3, 1, 1],
            young=[[6, 3, 2]],
        ),
        PresetExample(
            title="Sp(10,2,2,1^11), conjugate of Sp(14,3,1^8)",
            theorem="dual-a31b",
            parameters={"a": 14, "b": 9},
            specht=[10, 2, 2] + [1] * 11,
            young=[[14, 9, 2], [18, 5, 2], [14, 11]],
        ),
        PresetExample(
            title="M(6,3), core (2,1)",
            theorem="block-component",
            parameters={"m": 2, "a": 6, "b": 3, "l": 2, "p": 2},
            young=[[6, 3], [8, 1]],
        ),
        PresetExample(
            title="M(4,1), core (2,1)",
            theorem="block-component",
            parameters={"m": 2, "a": 4, "b": 1, "l": 2, "p": 2},
            young=[[4, 1]],
        ),
    ]
