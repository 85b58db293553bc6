"""
Partition and composition arithmetic

This module provides the canonical label types used everywhere else:
- Partition / Composition value types (immutable, canonical form)
- Text grammar: `part (',' part)*` with `part := INT ('^' INT)?`
- Conjugation, dominance order, staircases and adaptedness
- l-cores through beta-numbers on an l-runner abacus
- Hook lengths and the number of standard tableaux
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .errors import ParseError, PreconditionError, ValidityError

logger = logging.getLogger(__name__)

Parts = Tuple[int, ...]

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers (trailing zeros stripped)"""
    parts: Parts = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValidityError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidityError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part lookup; parts beyond the length are 0"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> Parts:
        if n < len(self.parts):
            raise ValidityError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def render(self) -> str:
        return render_partition(self.parts)

    def __str__(self) -> str:
        return f"({self.render()})"


@dataclass(frozen=True)
class Composition:
    """Finite sequence of nonnegative integers; order is significant"""
    parts: Parts = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise ValidityError(f"composition entries must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return f"({','.join(str(x) for x in self.parts)})"


PartitionLike = Union[Partition, Sequence[int]]


def as_partition(value: PartitionLike) -> Partition:
    if isinstance(value, Partition):
        return value
    return Partition(tuple(value))


def _expand_tokens(text: str) -> List[int]:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if not body:
        return []
    values: List[int] = []
    for token in body.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise ParseError(f"malformed part {token.strip()!r} in {text!r}")
        value = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) is not None else 1
        values.extend([value] * repeat)
    return values


def parse_partition(text: str) -> Partition:
    """
    Parse the partition grammar, e.g. "14,3,1^8" or "(2,1)".

    "()" and the empty string denote the zero partition.

    Raises:
        ParseError: malformed token
        ValidityError: not weakly decreasing, or a nonpositive part
    """
    values = _expand_tokens(text)
    if any(v <= 0 for v in values):
        raise ValidityError(f"partition parts must be positive: {text!r}")
    return Partition(tuple(values))


def parse_composition(text: str) -> Composition:
    """Same grammar as partitions, zeros allowed, no ordering constraint"""
    return Composition(tuple(_expand_tokens(text)))


def render_partition(parts: Sequence[int]) -> str:
    """Inverse of the grammar; runs of two or more equal parts become `x^k`"""
    chunks: List[str] = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        chunks.append(f"{parts[i]}^{run}" if run >= 2 else str(parts[i]))
        i = j
    return ",".join(chunks)


def conjugate(lam: PartitionLike) -> Partition:
    """Transpose partition: λ'_j = #{i : λ_i ≥ j}"""
    parts = as_partition(lam).parts
    return Partition(_conjugate_parts(parts))


def _conjugate_parts(parts: Parts) -> Parts:
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1))


def dominance_leq(lam: PartitionLike, mu: PartitionLike) -> bool:
    """True iff deg λ = deg μ and every prefix sum of λ is ≤ that of μ"""
    a = as_partition(lam).parts
    b = as_partition(mu).parts
    if sum(a) != sum(b):
        return False
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    left = right = 0
    for x, y in zip(a, b):
        left += x
        right += y
        if left > right:
            return False
    return True


def beta_numbers(lam: PartitionLike, beads: Optional[int] = None) -> Parts:
    """First-column hook lengths λ_i + (k - i), for k = beads ≥ length(λ)"""
    parts = as_partition(lam).parts
    k = len(parts) if beads is None else beads
    if k < len(parts):
        raise PreconditionError(f"need at least {len(parts)} beads, got {k}")
    padded = parts + (0,) * (k - len(parts))
    return tuple(padded[i] + (k - 1 - i) for i in range(k))


@lru_cache(maxsize=65536)
def _core_parts(parts: Parts, l: int) -> Parts:
    k = len(parts)
    if k == 0:
        return ()
    beta = [parts[i] + (k - 1 - i) for i in range(k)]
    # Slide every bead to the bottom of its runner.
    runner_counts = [0] * l
    for x in beta:
        runner_counts[x % l] += 1
    settled = sorted(
        (r + j * l for r in range(l) for j in range(runner_counts[r])),
        reverse=True,
    )
    core = [settled[i] - (k - 1 - i) for i in range(k)]
    while core and core[-1] == 0:
        core.pop()
    return tuple(core)


def l_core(lam: PartitionLike, l: int) -> Partition:
    """
    l-core of λ, computed on the abacus with length(λ) beads.

    Args:
        lam: the partition
        l: hook size, l ≥ 2

    Returns:
        Partition: the l-core
    """
    if l < 2:
        raise PreconditionError(f"l-core needs l >= 2 (l={l})")
    return Partition(_core_parts(as_partition(lam).parts, l))


def is_l_core(lam: PartitionLike, l: int) -> bool:
    parts = as_partition(lam).parts
    return l_core(parts, l).parts == parts


def staircase(m: int, l: int = 2) -> Partition:
    """(l-1)·(m, m-1, ..., 1); the empty partition for m = 0"""
    if m < 0 or l < 1:
        raise PreconditionError(f"staircase needs m >= 0 and l >= 1 (m={m}, l={l})")
    return Partition(tuple((l - 1) * (m - i) for i in range(m)))


def is_m_adapted(lam: PartitionLike, m: int) -> bool:
    """λ_i > m - i for every i ≥ 1 with λ_i > 0"""
    return _adapted(as_partition(lam).parts, m)


def _adapted(parts: Parts, m: int) -> bool:
    return all(x > m - i for i, x in enumerate(parts, start=1))


def add_scaled(base: PartitionLike, scale: int, mu: Sequence[int]) -> Partition:
    """
    Componentwise base + scale·μ (zero padded), e.g. σ_m + lμ.

    Raises:
        ValidityError: the sum is not a partition
    """
    if scale < 1:
        raise PreconditionError(f"scale must be positive (scale={scale})")
    left = tuple(as_partition(base).parts)
    right = tuple(int(x) for x in mu)
    if any(x < 0 for x in right):
        raise ValidityError(f"scaled summand has a negative entry: {right}")
    n = max(len(left), len(right))
    left = left + (0,) * (n - len(left))
    right = right + (0,) * (n - len(right))
    return Partition(tuple(x + scale * y for x, y in zip(left, right)))


def hook_lengths(lam: PartitionLike) -> List[List[int]]:
    parts = as_partition(lam).parts
    columns = _conjugate_parts(parts)
    return [
        [row - j + columns[j] - i - 1 for j in range(row)]
        for i, row in enumerate(parts)
    ]


def count_standard_tableaux(lam: PartitionLike) -> int:
    """Hook length formula: deg(λ)! / Π hooks, in exact integers"""
    parts = as_partition(lam).parts
    hooks = prod(h for row in hook_lengths(parts) for h in row)
    return factorial(sum(parts)) // hooks


def restricted_split(lam: PartitionLike, l: int) -> Tuple[Partition, Partition]:
    """
    Unique expression λ = λ⁰ + l·λ̄ with λ⁰ l-restricted
    (consecutive differences and last part below l).
    """
    parts = as_partition(lam).parts
    n = len(parts)
    rest = [0] * n
    for i in range(n - 1, -1, -1):
        below = parts[i + 1] if i + 1 < n else 0
        rest_below = rest[i + 1] if i + 1 < n else 0
        rest[i] = rest_below + (parts[i] - below) % l
    bar = tuple((parts[i] - rest[i]) // l for i in range(n))
    return Partition(tuple(rest)), Partition(bar)


def partitions_of(n: int, max_length: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order"""
    if n < 0:
        return
    cap_length = n if max_length is None else max_length
    cap_part = n if max_part is None else max_part

    def build(remaining: int, largest: int, prefix: List[int]) -> Iterator[Parts]:
        if remaining == 0:
            yield tuple(prefix)
            return
        if len(prefix) == cap_length:
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            yield from build(remaining - part, part, prefix)
            prefix.pop()

    for parts in build(n, cap_part, []):
        yield Partition(parts)
