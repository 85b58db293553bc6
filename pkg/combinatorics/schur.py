"""
Sparse Schur-basis arithmetic in the ring of symmetric functions

Elements are finite integer combinations of Schur functions s(λ) with no
bound on the number of variables. Multiplication by s(a) and s(1^r) uses
Pieri's rule; general products go through Littlewood-Richardson tableaux.
The two truncations keep only m-adapted indices (C_m) or only indices
with a fixed l-core (C*_γ).
"""

import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from .errors import PreconditionError
from .partitions import (
    Parts,
    Partition,
    PartitionLike,
    _adapted,
    _core_parts,
    as_partition,
    is_l_core,
    render_partition,
)

logger = logging.getLogger(__name__)


class SchurTerm(BaseModel):
    """JSON record of one term: {"partition": [...], "coeff": c}"""
    partition: List[int] = Field(default_factory=list, description="Schur index")
    coeff: int = Field(..., description="nonzero integer coefficient")


class SchurSum:
    """Finite formal Z-combination of Schur functions; immutable"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[PartitionLike, int]] = None):
        accumulated: Dict[Parts, int] = defaultdict(int)
        for key, coeff in (terms or {}).items():
            accumulated[as_partition(key).parts] += int(coeff)
        self._terms: Dict[Parts, int] = {k: c for k, c in accumulated.items() if c != 0}

    @classmethod
    def _from_raw(cls, raw: Mapping[Parts, int]) -> "SchurSum":
        # Keys are trusted canonical tuples.
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in raw.items() if c != 0}
        return obj

    @classmethod
    def zero(cls) -> "SchurSum":
        return cls._from_raw({})

    @classmethod
    def unit(cls) -> "SchurSum":
        return cls._from_raw({(): 1})

    def coefficient(self, lam: PartitionLike) -> int:
        return self._terms.get(as_partition(lam).parts, 0)

    def support(self) -> List[Partition]:
        return [Partition(k) for k in sorted(self._terms, reverse=True)]

    def items(self) -> Iterator[Tuple[Partition, int]]:
        """Terms in descending lexicographic order of index"""
        for key in sorted(self._terms, reverse=True):
            yield Partition(key), self._terms[key]

    def raw_items(self) -> Iterable[Tuple[Parts, int]]:
        return self._terms.items()

    def degree_set(self) -> set:
        return {sum(k) for k in self._terms}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SchurSum") -> "SchurSum":
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            result[key] = result.get(key, 0) + coeff
        return SchurSum._from_raw(result)

    def __neg__(self) -> "SchurSum":
        return SchurSum._from_raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SchurSum") -> "SchurSum":
        return self + (-other)

    def __mul__(self, other: Union["SchurSum", int]) -> "SchurSum":
        if isinstance(other, int):
            return SchurSum._from_raw({k: c * other for k, c in self._terms.items()})
        if isinstance(other, SchurSum):
            return lr_multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{coeff}*s({render_partition(lam.parts)})" for lam, coeff in self.items())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SchurSum({self.render()})"

    def to_records(self) -> List[dict]:
        return [
            SchurTerm(partition=list(lam.parts), coeff=coeff).model_dump()
            for lam, coeff in self.items()
        ]

    @classmethod
    def from_records(cls, records: Sequence[Mapping]) -> "SchurSum":
        terms = [SchurTerm.model_validate(record) for record in records]
        accumulated: Dict[Parts, int] = defaultdict(int)
        for term in terms:
            accumulated[Partition(tuple(term.partition)).parts] += term.coeff
        return cls._from_raw(accumulated)


def schur(lam: PartitionLike) -> SchurSum:
    """Basis element s(λ)"""
    return SchurSum._from_raw({as_partition(lam).parts: 1})


def vertical_strips(parts: Parts, r: int) -> Iterator[Parts]:
    """Partitions μ ⊇ λ with μ/λ one box in each of r distinct rows"""
    n = len(parts) + r
    ext = list(parts) + [0] * r
    chosen = [0] * n

    def walk(i: int, remaining: int) -> Iterator[Parts]:
        if remaining == 0:
            shape = [ext[j] + chosen[j] for j in range(i)] + ext[i:]
            while shape and shape[-1] == 0:
                shape.pop()
            yield tuple(shape)
            return
        if n - i < remaining:
            return
        # skip row i
        chosen[i] = 0
        yield from walk(i + 1, remaining)
        if i == 0 or ext[i - 1] + chosen[i - 1] >= ext[i] + 1:
            chosen[i] = 1
            yield from walk(i + 1, remaining - 1)
            chosen[i] = 0

    yield from walk(0, r)


def horizontal_strips(parts: Parts, a: int) -> Iterator[Parts]:
    """Partitions μ ⊇ λ with μ/λ a horizontal strip of a boxes"""
    n = len(parts)
    shape = list(parts) + [0]

    def walk(i: int, remaining: int) -> Iterator[Parts]:
        cap = remaining if i == 0 else min(remaining, parts[i - 1] - shape[i])
        if i == n:
            if remaining <= cap:
                shape[n] = remaining
                yield tuple(x for x in shape if x > 0)
                shape[n] = 0
            return
        base = shape[i]
        for added in range(cap, -1, -1):
            shape[i] = base + added
            yield from walk(i + 1, remaining - added)
        shape[i] = base

    yield from walk(0, a)


def _apply(g: SchurSum, strips) -> SchurSum:
    result: Dict[Parts, int] = defaultdict(int)
    for key, coeff in g.raw_items():
        for mu in strips(key):
            result[mu] += coeff
    return SchurSum._from_raw(result)


def pieri_column(g: SchurSum, r: int) -> SchurSum:
    """g · s(1^r)"""
    if r < 0:
        raise PreconditionError(f"column length must be nonnegative (r={r})")
    product = _apply(g, lambda key: vertical_strips(key, r))
    logger.debug(f"pieri_column r={r}: {len(g)} -> {len(product)} terms")
    return product


def pieri_row(g: SchurSum, a: int) -> SchurSum:
    """g · s(a)"""
    if a < 0:
        raise PreconditionError(f"row length must be nonnegative (a={a})")
    product = _apply(g, lambda key: horizontal_strips(key, a))
    logger.debug(f"pieri_row a={a}: {len(g)} -> {len(product)} terms")
    return product


@lru_cache(maxsize=4096)
def lr_coefficients(lam: Parts, mu: Parts) -> Tuple[Tuple[Parts, int], ...]:
    """
    Littlewood-Richardson coefficients c^ν_{λμ} for all ν.

    Letters 1..len(μ) are placed as successive horizontal strips over λ.
    The reverse reading word is lattice iff, for every letter i ≥ 2 and row j,
    the number of i's in rows ≤ j is at most the number of (i-1)'s in rows < j;
    this bound is checked while each strip is being placed.
    """
    rows = len(lam) + len(mu)
    counts: Dict[Parts, int] = defaultdict(int)
    shape = list(lam) + [0] * (rows - len(lam))

    def place(letter: int, previous: List[int]) -> None:
        if letter == len(mu):
            counts[tuple(x for x in shape if x > 0)] += 1
            return
        old = list(shape)
        current = [0] * rows

        def fill(j: int, remaining: int, used_here: int, used_prev: int) -> None:
            # used_here: letters of this strip in rows < j; used_prev: previous letter in rows < j
            if remaining == 0:
                place(letter + 1, current)
                return
            if j == rows:
                return
            cap = remaining if j == 0 else min(remaining, old[j - 1] - old[j])
            if letter > 0:
                cap = min(cap, used_prev - used_here)
            for added in range(max(cap, 0), -1, -1):
                shape[j] = old[j] + added
                current[j] = added
                fill(j + 1, remaining - added, used_here + added,
                     used_prev + (previous[j] if letter > 0 else 0))
            shape[j] = old[j]
            current[j] = 0

        fill(0, mu[letter], 0, 0)

    place(0, [0] * rows)
    return tuple(sorted(counts.items(), reverse=True))


def lr_multiply(g: SchurSum, h: SchurSum) -> SchurSum:
    """Full product through Littlewood-Richardson coefficients"""
    result: Dict[Parts, int] = defaultdict(int)
    for lam, a in g.raw_items():
        for mu, b in h.raw_items():
            # c^ν_{λμ} = c^ν_{μλ}; enumerate with the shorter content
            first, second = (lam, mu) if sum(mu) <= sum(lam) else (mu, lam)
            for nu, c in lr_coefficients(first, second):
                result[nu] += a * b * c
    return SchurSum._from_raw(result)


def truncate_adapted(g: SchurSum, m: int) -> SchurSum:
    """C_m: keep the terms whose index is m-adapted"""
    return SchurSum._from_raw({k: c for k, c in g.raw_items() if _adapted(k, m)})


def truncate_core(g: SchurSum, gamma: PartitionLike, l: int) -> SchurSum:
    """
    C*_γ: keep the terms whose index has l-core γ.

    Raises:
        PreconditionError: γ is not an l-core
    """
    core = as_partition(gamma)
    if l < 2 or not is_l_core(core, l):
        raise PreconditionError(f"{core} is not a {l}-core")
    target = core.parts
    return SchurSum._from_raw({k: c for k, c in g.raw_items() if _core_parts(k, l) == target})


def core_components(g: SchurSum, l: int) -> Dict[Partition, SchurSum]:
    """Split g by the l-core of each index"""
    buckets: Dict[Parts, Dict[Parts, int]] = defaultdict(dict)
    for key, coeff in g.raw_items():
        buckets[_core_parts(key, l)][key] = coeff
    return {Partition(core): SchurSum._from_raw(terms) for core, terms in buckets.items()}


def product_character(rows: Sequence[int], cols: Sequence[int]) -> SchurSum:
    """Π s(rows_i) · Π s(1^{cols_j}), rows first then cols, left to right"""
    g = SchurSum.unit()
    for a in rows:
        g = pieri_row(g, int(a))
    for r in cols:
        g = pieri_column(g, int(r))
    return g
