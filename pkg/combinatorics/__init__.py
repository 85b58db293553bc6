"""
Exact combinatorics for Specht and Young module labels

- Partitions, cores and the label grammar
- Sparse Schur-function arithmetic with Pieri and Littlewood-Richardson products
- p-special and (l, p)-special pairs
- Weight multiplicities of simple modules in rank at most 3
"""

from .errors import (
    ConsistencyError,
    DomainError,
    ParseError,
    PreconditionError,
    SpechtError,
    UnsupportedBaseCaseError,
    ValidityError,
)
from .partitions import (
    Composition,
    Partition,
    add_scaled,
    conjugate,
    dominance_leq,
    is_l_core,
    is_m_adapted,
    l_core,
    parse_composition,
    parse_partition,
    render_partition,
    staircase,
)
from .schur import SchurSum, product_character, schur, truncate_adapted, truncate_core
from .special import SpecialParams, enumerate_special_two_part, is_lp_special, is_p_special
from .characters import (
    WeightCharacter,
    a31b_weight_mult,
    gl2_weight_mult,
    gl3_simple_character_oracle,
    sl2_simple_character,
    staircase_weight_mult,
)

__version__ = "1.0.0"
__all__ = [
    "SpechtError",
    "ParseError",
    "ValidityError",
    "PreconditionError",
    "DomainError",
    "UnsupportedBaseCaseError",
    "ConsistencyError",
    "Partition",
    "Composition",
    "parse_partition",
    "parse_composition",
    "render_partition",
    "conjugate",
    "dominance_leq",
    "l_core",
    "is_l_core",
    "staircase",
    "is_m_adapted",
    "add_scaled",
    "SchurSum",
    "schur",
    "product_character",
    "truncate_adapted",
    "truncate_core",
    "SpecialParams",
    "is_p_special",
    "is_lp_special",
    "enumerate_special_two_part",
    "WeightCharacter",
    "sl2_simple_character",
    "gl2_weight_mult",
    "staircase_weight_mult",
    "a31b_weight_mult",
    "gl3_simple_character_oracle",
]
