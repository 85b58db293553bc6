"""
Verifications behind the decomposition theorems

- The σ_m-core component of s(a)·s(1^b)·s(1^{m-2})···s(1), and its m-adapted part
- The (a, 3, 1^{b-1}) summands against the staircase summands of Sp(a+2, 1^b),
  independently enumerated families, and weight multiplicities
- Grid runners for these and for the rank-one, rank-two and rank-three oracles
"""

import logging
from collections import Counter
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from combinatorics.characters import (
    a31b_violations,
    a31b_weight_mult,
    a31b_weight_mult_oracle,
    dominant_weight_mult,
    gl2_classical_mult,
    gl2_weight_mult,
    sl2_simple_character,
)
from combinatorics.errors import PreconditionError
from combinatorics.partitions import Partition, add_scaled, partitions_of, staircase
from combinatorics.schur import SchurSum, SchurTerm, product_character, schur, truncate_adapted, truncate_core
from combinatorics.special import SpecialParams, exhaustive_special_values, is_p_special
from config.preset_examples import get_preset_examples
from config.settings import get_settings

from .built_in.a31b import a31b_uv, decompose_a31b
from .built_in.hooks import decompose_power_hook
from .built_in.staircase import decompose_staircase, staircase_specht_label
from .core.executor import GridExecutor
from .core.models import GridReport, Summand
from .core.registry import theorem_registry

logger = logging.getLogger(__name__)


class CoreIdentityCase(str, Enum):
    CASE_ONE = "case 1"      # a-m odd, b-m even
    CASE_TWO = "case 2"      # a-m even, b-m odd
    ZERO = "zero"
    MISMATCH = "MISMATCH"


class CoreIdentityVerdict(BaseModel):
    """Outcome of comparing C*_{σ_m}(s(a)s(1^b)s(1^{m-2})···s(1)) with its closed form"""
    m: int
    a: int
    b: int
    verdict: CoreIdentityCase
    expected: List[SchurTerm] = Field(default_factory=list, description="closed form for the core component")
    core_component: List[SchurTerm] = Field(default_factory=list, description="computed core component")
    adapted_matches: bool = Field(..., description="C_m of the product equals its two-term closed form")
    details: Optional[str] = None

    @property
    def matched(self) -> bool:
        return self.verdict != CoreIdentityCase.MISMATCH

    def render(self) -> str:
        computed = SchurSum.from_records([t.model_dump() for t in self.core_component])
        text = f"m={self.m}, a={self.a}, b={self.b}: {self.verdict.value}: {computed.render()}"
        if self.details:
            text += f"\n  {self.details}"
        return text


def _records(g: SchurSum) -> List[SchurTerm]:
    return [SchurTerm(**record) for record in g.to_records()]


def verify_core_identity(m: int, a: int, b: int) -> CoreIdentityVerdict:
    """
    Compute the σ_m-core component of s(a)·s(1^b)·s(1^{m-2})···s(1) at l = 2 and
    compare it with s(a+1, m-1, ..., 2, 1^{b-m+1}) when a-m is odd and b-m even,
    s(a, m-1, ..., 2, 1^{b-m+2}) when a-m is even and b-m odd, and 0 otherwise.

    The m-adapted part must also equal the sum of those two Schur functions.

    Raises:
        PreconditionError: m < 2, a < m or b < m-1
    """
    violations = []
    if m < 2:
        violations.append(f"m must be at least 2 (m={m})")
    if a < m:
        violations.append(f"a must be at least m (a={a}, m={m})")
    if b < m - 1:
        violations.append(f"b must be at least m-1 (b={b}, m={m})")
    if violations:
        raise PreconditionError("; ".join(violations), violations)

    product = product_character(rows=(a,), cols=(b,) + tuple(range(m - 2, 0, -1)))
    first = schur(Partition((a + 1,) + tuple(range(m - 1, 1, -1)) + (1,) * (b - m + 1)))
    second = schur(staircase_specht_label(m, a, b))

    adapted = truncate_adapted(product, m)
    adapted_matches = adapted == first + second

    component = truncate_core(product, staircase(m, 2), 2)
    if (a - m) % 2 == 1 and (b - m) % 2 == 0:
        case, expected = CoreIdentityCase.CASE_ONE, first
    elif (a - m) % 2 == 0 and (b - m) % 2 == 1:
        case, expected = CoreIdentityCase.CASE_TWO, second
    else:
        case, expected = CoreIdentityCase.ZERO, SchurSum.zero()

    details = None
    if component != expected or not adapted_matches:
        details = (
            f"expected core component {expected.render()}; "
            f"adapted part {adapted.render()} vs {(first + second).render()}"
        )
        logger.warning(f"core identity mismatch at m={m}, a={a}, b={b}: {details}")
        case = CoreIdentityCase.MISMATCH

    return CoreIdentityVerdict(
        m=m,
        a=a,
        b=b,
        verdict=case,
        expected=_records(expected),
        core_component=_records(component),
        adapted_matches=adapted_matches,
        details=details,
    )


def _summands(counts: Counter) -> List[Summand]:
    return [Summand(young=list(parts), mult=mult) for parts, mult in sorted(counts.items(), reverse=True)]


def _render_multiset(summands: List[Summand]) -> str:
    if not summands:
        return "0"
    return " + ".join(
        f"Y({','.join(map(str, s.young))})" + (f"^({s.mult})" if s.mult > 1 else "") for s in summands
    )


class A31bConsistencyVerdict(BaseModel):
    """
    Three descriptions of the σ_2-core part of M(a, b, 2) at the Young module level:
    theorem outputs, independently enumerated families, and weight multiplicities
    """
    a: int
    b: int
    consistent: bool
    theorem_side: List[Summand] = Field(default_factory=list, description="Sp(a,3,1^{b-1}) plus twice Sp(a+2,1^b)")
    family_side: List[Summand] = Field(default_factory=list, description="μ, 2ν and ρ families")
    weight_side: List[Summand] = Field(default_factory=list, description="d_μ = dim L(σ_2+2μ)^{(a,b,2)}")

    def render(self) -> str:
        status = "consistent" if self.consistent else "MISMATCH"
        lines = [f"a={self.a}, b={self.b}: {status}: {_render_multiset(self.theorem_side)}"]
        if not self.consistent:
            lines.append(f"  families: {_render_multiset(self.family_side)}")
            lines.append(f"  weights:  {_render_multiset(self.weight_side)}")
        return "\n".join(lines)


def enumerate_a31b_families(a: int, b: int) -> Counter:
    """
    Scan every partition of u + v + 1 with at most three parts and collect
    μ = (μ_1, μ_2, 1), ν (twice) and ρ = σ_2 + 2ρ̄ by their defining conditions
    """
    u, v = a31b_uv(a, b)
    core = staircase(2, 2)
    counts: Counter = Counter()
    for mu in partitions_of(u + v + 1, max_length=3):
        first, second, third = mu.padded(3)
        label = add_scaled(core, 2, mu.parts).parts
        if third == 1 and is_p_special(first - second, u - v, 2):
            counts[label] += 1
        if third == 0 and is_p_special(first - second, u - v + 1, 2):
            counts[label] += 2
        if third == 0 and first >= 2 and first % 2 == 0 and second % 2 == 1:
            bar_first, bar_second = (first - 2) // 2, (second - 1) // 2
            if bar_first >= bar_second and is_p_special(2 * (bar_first - bar_second), u - v - 2, 2):
                counts[label] += 1
    return counts


def a31b_weight_multiset(a: int, b: int) -> Counter:
    """Y(σ_2 + 2μ) with multiplicity dim L(σ_2 + 2μ)^{(a, b, 2)} over |μ| = u + v + 1"""
    u, v = a31b_uv(a, b)
    core = staircase(2, 2)
    counts: Counter = Counter()
    for mu in partitions_of(u + v + 1, max_length=3):
        if mu.length <= 2:
            mult = a31b_weight_mult(a, b, mu)
        elif mu.part(3) == 1:
            mult = gl2_classical_mult((mu.part(1) - 1, mu.part(2) - 1), (u - 1, v - 1), 2)
        else:
            # (a, b, 2) is not dominated by σ_2 + 2μ
            mult = 0
        if mult:
            counts[add_scaled(core, 2, mu.parts).parts] += mult
    return counts


def verify_a31b_consistency(a: int, b: int) -> A31bConsistencyVerdict:
    """
    Sp(a,3,1^{b-1}) ⊕ Sp(a+2,1^b)^{⊕2} three ways: from the theorems, from the
    μ ⊎ 2ν ⊎ ρ families, and from the weight multiplicities d_μ.

    Raises:
        PreconditionError: a not ≡ 2 mod 4 with a ≥ 4, or b not odd ≥ 3
    """
    violations = a31b_violations(a, b)
    if violations:
        raise PreconditionError("; ".join(violations), violations)

    theorem_side = decompose_a31b(a, b).multiset()
    for label, mult in decompose_staircase(2, a + 2, b, 2).multiset().items():
        theorem_side[label] += 2 * mult
    family_side = enumerate_a31b_families(a, b)
    weight_side = a31b_weight_multiset(a, b)

    consistent = theorem_side == family_side == weight_side
    if not consistent:
        logger.warning(f"a31b consistency mismatch at a={a}, b={b}")
    return A31bConsistencyVerdict(
        a=a,
        b=b,
        consistent=consistent,
        theorem_side=_summands(theorem_side),
        family_side=_summands(family_side),
        weight_side=_summands(weight_side),
    )


def _executor(workers: Optional[int]) -> GridExecutor:
    return GridExecutor(max_workers=workers or get_settings().grid_workers)


def _core_identity_case(m: int, a: int, b: int) -> Optional[str]:
    verdict = verify_core_identity(m, a, b)
    return None if verdict.matched else verdict.details


def core_identity_grid(
    max_m: Optional[int] = None,
    a_span: Optional[int] = None,
    b_span: Optional[int] = None,
    workers: Optional[int] = None,
) -> GridReport:
    """verify_core_identity over 2 ≤ m ≤ max_m, m ≤ a ≤ m + a_span, m-1 ≤ b ≤ m + b_span"""
    bounds = get_settings().grids
    max_m = bounds.core_identity_max_m if max_m is None else max_m
    a_span = bounds.core_identity_a_span if a_span is None else a_span
    b_span = bounds.core_identity_b_span if b_span is None else b_span
    grid = [
        {"m": m, "a": a, "b": b}
        for m in range(2, max_m + 1)
        for a in range(m, m + a_span + 1)
        for b in range(m - 1, m + b_span + 1)
    ]
    return _executor(workers).run("core-identity", _core_identity_case, grid)


def _a31b_grid(max_a: int, max_b: int, min_a: int = 6) -> List[Dict[str, int]]:
    return [
        {"a": a, "b": b}
        for a in range(min_a, max_a + 1, 4)
        for b in range(3, max_b + 1, 2)
    ]


def _a31b_consistency_case(a: int, b: int) -> Optional[str]:
    verdict = verify_a31b_consistency(a, b)
    return None if verdict.consistent else verdict.render()


def a31b_consistency_grid(
    max_a: Optional[int] = None, max_b: Optional[int] = None, workers: Optional[int] = None
) -> GridReport:
    """verify_a31b_consistency for every valid (a, b) with a ≤ max_a, b ≤ max_b"""
    bounds = get_settings().grids
    max_a = bounds.a31b_max_a if max_a is None else max_a
    max_b = bounds.a31b_max_b if max_b is None else max_b
    return _executor(workers).run("a31b-consistency", _a31b_consistency_case, _a31b_grid(max_a, max_b))


def _a31b_weight_case(a: int, b: int) -> Optional[str]:
    u, v = a31b_uv(a, b)
    for mu in partitions_of(u + v + 1, max_length=3):
        direct = dominant_weight_mult(a, b, mu)
        if mu.length <= 2:
            closed = a31b_weight_mult(a, b, mu)
            split = a31b_weight_mult_oracle(a, b, mu)
            if not closed == split == direct:
                return f"μ={mu}: case formula {closed}, oracle split {split}, oracle direct {direct}"
        else:
            reduced = gl2_classical_mult((mu.part(1) - 1, mu.part(2) - 1), (u - 1, v - 1), 2) if mu.part(3) == 1 else 0
            if reduced != direct:
                return f"μ={mu}: rank-two reduction {reduced}, oracle direct {direct}"
    return None


def a31b_weight_grid(
    max_a: Optional[int] = None, max_b: Optional[int] = None, workers: Optional[int] = None
) -> GridReport:
    """
    dim L(σ_2 + 2μ)^{(a, b, 2)}: the case formula and the rank-two reduction
    against the rank-three oracle, for a ≡ 2 mod 4, b odd, and every μ of the right degree
    """
    bounds = get_settings().grids
    max_a = bounds.a31b_weight_max_a if max_a is None else max_a
    max_b = bounds.a31b_weight_max_b if max_b is None else max_b
    grid = _a31b_grid(max_a, max_b, min_a=2)
    return _executor(workers).run("a31b-weight", _a31b_weight_case, grid)


def _rank_two_case(l: int, p: int, c: int) -> Optional[str]:
    params = SpecialParams(l=l, p=p)
    for d in range(c + 1):
        character = sl2_simple_character(c - d, params)
        for a in range(d - 1, c + 2):
            b = c + d - a
            closed = gl2_weight_mult(c, d, a, b, params)
            oracle = character.multiplicity((a - b,))
            if closed != oracle:
                return f"L({c},{d}) at weight ({a},{b}): special pair gives {closed}, character gives {oracle}"
    return None


def rank_two_equivalence_grid(
    max_c: Optional[int] = None,
    pairs: Optional[Sequence[Tuple[int, int]]] = None,
    workers: Optional[int] = None,
) -> GridReport:
    """gl2_weight_mult against the Steinberg character of SL2 for 0 ≤ d ≤ c ≤ max_c"""
    bounds = get_settings().grids
    max_c = bounds.rank_two_max_c if max_c is None else max_c
    pairs = bounds.rank_two_params if pairs is None else pairs
    grid = [{"l": l, "p": p, "c": c} for l, p in pairs for c in range(max_c + 1)]
    return _executor(workers).run("rank-two", _rank_two_case, grid)


def _special_oracle_case(p: int, r: int) -> Optional[str]:
    reachable = exhaustive_special_values(r, p)
    for b in range(-r, r + 1):
        if is_p_special(r, b, p) != (b in reachable):
            return f"({r},{b}) at p={p}: recursion {is_p_special(r, b, p)}, digit vectors {b in reachable}"
    return None


def special_oracle_grid(
    max_r: Optional[int] = None, primes: Optional[Sequence[int]] = None, workers: Optional[int] = None
) -> GridReport:
    """is_p_special against exhaustive digit vectors for 0 ≤ r ≤ max_r, |b| ≤ r"""
    bounds = get_settings().grids
    max_r = bounds.special_max_r if max_r is None else max_r
    primes = bounds.special_primes if primes is None else primes
    grid = [{"p": p, "r": r} for p in primes for r in range(max_r + 1)]
    return _executor(workers).run("special-oracle", _special_oracle_case, grid)


def _power_hook_case(k: int) -> Optional[str]:
    result = decompose_power_hook(k)
    if len(result.summands) != k:
        return f"k={k}: {len(result.summands)} summands"
    return None


def power_hook_grid(max_k: Optional[int] = None, workers: Optional[int] = None) -> GridReport:
    """decompose_power_hook(k) for 1 ≤ k ≤ max_k: closed form agrees and has k summands"""
    max_k = get_settings().grids.power_hook_max_k if max_k is None else max_k
    grid = [{"k": k} for k in range(1, max_k + 1)]
    return _executor(workers).run("power-hook", _power_hook_case, grid)


def _example_case(index: int) -> Optional[str]:
    example = get_preset_examples()[index]
    result = theorem_registry.require_theorem(example.theorem).decompose(**example.parameters)
    problems = []
    if example.specht is not None and result.specht != example.specht:
        problems.append(f"Specht label {result.specht}, expected {example.specht}")
    expected = Counter(tuple(label) for label in example.young)
    if result.multiset() != expected:
        problems.append(f"summands {result.render()}, expected {sorted(expected, reverse=True)}")
    if problems:
        return f"{example.title}: " + "; ".join(problems)
    return None


def verify_examples(workers: Optional[int] = None) -> GridReport:
    """Replay every preset worked example through the theorem registry"""
    grid = [{"index": index} for index in range(len(get_preset_examples()))]
    return _executor(workers).run("examples", _example_case, grid)
