"""
Weight multiplicities of simple modules in rank at most 3

Characters are sparse weight maps. Simple characters come from Steinberg's
tensor product theorem: the quantum layer of size l is split off first and
every deeper layer uses the characteristic p. Rank-one restricted layers are
full weight strings; rank-three restricted layers come from a small table
and anything outside it is refused.
"""

import logging
from collections import defaultdict
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    ConsistencyError,
    DomainError,
    PreconditionError,
    UnsupportedBaseCaseError,
    ValidityError,
)
from .partitions import (
    Parts,
    Partition,
    PartitionLike,
    add_scaled,
    as_partition,
    dominance_leq,
    restricted_split,
    staircase,
)
from .special import SpecialParams, check_characteristic, is_lp_special, is_p_special

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


class WeightCharacter:
    """Formal character Σ dim V^α e^α of a rank-n torus module"""

    __slots__ = ("rank", "_mults")

    def __init__(self, rank: int, mults: Optional[Mapping[Sequence[int], int]] = None):
        if rank < 1:
            raise ValidityError(f"rank must be positive (rank={rank})")
        self.rank = rank
        self._mults: Dict[Weight, int] = {}
        for weight, mult in (mults or {}).items():
            key = tuple(int(x) for x in weight)
            if len(key) != rank:
                raise ValidityError(f"weight {key} does not have rank {rank}")
            if mult < 0:
                raise ValidityError(f"negative multiplicity {mult} at {key}")
            if mult:
                self._mults[key] = self._mults.get(key, 0) + int(mult)

    @classmethod
    def trivial(cls, rank: int) -> "WeightCharacter":
        return cls(rank, {(0,) * rank: 1})

    def multiplicity(self, weight: Sequence[int]) -> int:
        return self._mults.get(tuple(weight), 0)

    def weights(self) -> List[Weight]:
        return sorted(self._mults, reverse=True)

    def items(self) -> Iterator[Tuple[Weight, int]]:
        for weight in self.weights():
            yield weight, self._mults[weight]

    @property
    def dimension(self) -> int:
        return sum(self._mults.values())

    def __len__(self) -> int:
        return len(self._mults)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightCharacter):
            return NotImplemented
        return self.rank == other.rank and self._mults == other._mults

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self._mults.items())))

    def __mul__(self, other: "WeightCharacter") -> "WeightCharacter":
        """Tensor product: convolution of weight maps"""
        if not isinstance(other, WeightCharacter):
            return NotImplemented
        if self.rank != other.rank:
            raise ValidityError(f"rank mismatch: {self.rank} vs {other.rank}")
        result: Dict[Weight, int] = defaultdict(int)
        for alpha, x in self._mults.items():
            for beta, y in other._mults.items():
                result[tuple(s + t for s, t in zip(alpha, beta))] += x * y
        return WeightCharacter(self.rank, result)

    def frobenius(self, scale: int) -> "WeightCharacter":
        """Twist by a Frobenius map: every weight is multiplied by scale"""
        return WeightCharacter(
            self.rank,
            {tuple(scale * x for x in weight): mult for weight, mult in self._mults.items()},
        )

    def shift(self, offset: Sequence[int]) -> "WeightCharacter":
        """Tensor with the one-dimensional module of weight offset"""
        if len(offset) != self.rank:
            raise ValidityError(f"shift {tuple(offset)} does not have rank {self.rank}")
        return WeightCharacter(
            self.rank,
            {tuple(x + y for x, y in zip(weight, offset)): mult for weight, mult in self._mults.items()},
        )

    def is_symmetric(self) -> bool:
        """Invariant under permutations of coordinates (negation in rank one)"""
        if self.rank == 1:
            return all(self.multiplicity((-w[0],)) == m for w, m in self._mults.items())
        return all(
            self.multiplicity(tuple(sorted(w, reverse=True))) == m for w, m in self._mults.items()
        )

    def dominated_by(self, highest: Sequence[int]) -> bool:
        """Every weight, sorted decreasingly, is ≤ highest in dominance order"""
        top = tuple(highest)
        if self.rank == 1:
            return all(abs(weight[0]) <= top[0] for weight in self._mults)
        for weight in self._mults:
            ordered = tuple(sorted(weight, reverse=True))
            # a common shift keeps both in the polynomial range
            low = min(0, ordered[-1], top[-1])
            if not dominance_leq([x - low for x in ordered], [x - low for x in top]):
                return False
        return True

    def render(self) -> str:
        if not self._mults:
            return "0"
        return " + ".join(
            f"{mult}*e({','.join(str(x) for x in weight)})" for weight, mult in self.items()
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"WeightCharacter(rank={self.rank}, {self.render()})"

    def to_records(self) -> List[dict]:
        return [{"weight": list(weight), "mult": mult} for weight, mult in self.items()]


def weight_string(r: int) -> WeightCharacter:
    """Weyl character of SL2 with highest weight r: r, r-2, ..., -r"""
    return WeightCharacter(1, {(r - 2 * k,): 1 for k in range(r + 1)})


@lru_cache(maxsize=4096)
def _classical_sl2(r: int, p: int) -> WeightCharacter:
    if p == 0 or r < p:
        return weight_string(r)
    return weight_string(r % p) * _classical_sl2(r // p, p).frobenius(p)


def sl2_simple_character(r: int, params: SpecialParams) -> WeightCharacter:
    """
    Character of the simple module of highest weight r for quantum SL2
    at order l over characteristic p.

    Raises:
        DomainError: r < 0
    """
    if r < 0:
        raise DomainError(f"highest weight must be nonnegative (r={r})")
    restricted = weight_string(r % params.l)
    return restricted * _classical_sl2(r // params.l, params.p).frobenius(params.l)


def gl2_weight_mult(c: int, d: int, a: int, b: int, params: SpecialParams) -> int:
    """
    dim L(c, d)^{(a, b)} for quantum GL2: 1 iff (c - d, a - b) is (l, p)-special.

    Raises:
        PreconditionError: c < d or a + b ≠ c + d
    """
    violations = []
    if c < d:
        violations.append(f"highest weight must satisfy c >= d (c={c}, d={d})")
    if a + b != c + d:
        violations.append(f"weight degree a+b={a + b} differs from c+d={c + d}")
    if violations:
        raise PreconditionError("; ".join(violations), violations)
    return 1 if is_lp_special(c - d, a - b, params) else 0


def gl2_classical_mult(lam: PartitionLike, weight: Sequence[int], p: int) -> int:
    """dim L(λ)^{(x, y)} for classical GL2 in characteristic p; 0 off the weight lattice"""
    mu = as_partition(lam)
    if mu.length > 2:
        raise ValidityError(f"{mu} has more than two parts")
    c, d = mu.padded(2)
    x, y = weight
    if x + y != c + d or x < 0 or y < 0:
        return 0
    return 1 if is_p_special(c - d, x - y, p) else 0


def staircase_weight_mult(m: int, a: int, b: int, mu: PartitionLike, params: SpecialParams) -> int:
    """
    dim L(σ_m + lμ)^{(a, b, (m-2)(l-1), ..., l-1)}.

    The rows below the second are stripped one at a time, reducing to
    dim L(σ_1 + lμ)^{(a - (m-1)(l-1), b - (m-1)(l-1))} in rank two. When
    a + m ≡ 0 and b + m ≡ 1 (mod l) the closed form [(c - d, u - v) p-special]
    applies as well and the two must agree.

    Raises:
        PreconditionError: m < 1, a < m(l-1) or b < (m-1)(l-1)
        ValidityError: μ has more than two parts
        ConsistencyError: the two evaluations disagree
    """
    l = params.l
    violations = []
    if m < 1:
        violations.append(f"m must be at least 1 (m={m})")
    if a < m * (l - 1):
        violations.append(f"a must be at least m(l-1)={m * (l - 1)} (a={a})")
    if b < (m - 1) * (l - 1):
        violations.append(f"b must be at least (m-1)(l-1)={(m - 1) * (l - 1)} (b={b})")
    if violations:
        raise PreconditionError("; ".join(violations), violations)
    weight = as_partition(mu)
    if weight.length > 2:
        raise ValidityError(f"{weight} has more than two parts; the weight space is zero only for two-part μ")
    c, d = weight.padded(2)

    shift = (m - 1) * (l - 1)
    top, bottom = l - 1 + l * c, l * d
    x, y = a - shift, b - shift
    reduced = gl2_weight_mult(top, bottom, x, y, params) if x + y == top + bottom else 0

    if (a + m) % l == 0 and (b + m) % l == 1 % l:
        u = (a - m * (l - 1)) // l
        v = (b - (m - 1) * (l - 1)) // l
        closed = 1 if c + d == u + v and is_p_special(c - d, u - v, params.p) else 0
        if closed != reduced:
            raise ConsistencyError(
                f"staircase multiplicity disagrees for m={m}, a={a}, b={b}, μ={weight}, {params}: "
                f"reduction {reduced}, closed form {closed}"
            )
    return reduced


def a31b_violations(a: int, b: int, min_a: int = 4) -> List[str]:
    """Violated hypotheses for the (a, 3, 1^{b-1}) family; empty when valid"""
    violations = []
    if a < min_a or a % 2:
        violations.append(f"a must be even and at least {min_a} (a={a})")
    elif a % 4 == 0:
        violations.append(f"a must not be divisible by 4 (a={a})")
    if b < 3 or b % 2 == 0:
        violations.append(f"b must be odd and at least 3 (b={b})")
    return violations


def a31b_weight_mult(a: int, b: int, mu: PartitionLike) -> int:
    """
    dim L(σ_2 + 2μ)^{(a, b, 2)} in characteristic 2 for a two-part μ.

    With a = 2(u+1), b = 2v+1 and μ = μ⁰ + 2μ̄, this is
    2·dim L(μ)^{(u+1, v)}, plus dim L(2μ̄)^{(u-2, v)} when μ⁰ = (2,1).

    Raises:
        PreconditionError: a not ≡ 2 mod 4 with a ≥ 2, or b not odd ≥ 3
        ValidityError: μ has more than two parts
    """
    violations = a31b_violations(a, b, min_a=2)
    if violations:
        raise PreconditionError("; ".join(violations), violations)
    weight = as_partition(mu)
    if weight.length > 2:
        raise ValidityError(f"{weight} has more than two parts")
    u, v = a // 2 - 1, (b - 1) // 2
    restricted, bar = restricted_split(weight, 2)
    value = 2 * gl2_classical_mult(weight, (u + 1, v), 2)
    if restricted.parts == (2, 1):
        value += gl2_classical_mult(add_scaled((), 2, bar.parts), (u - 2, v), 2)
    return value


def _gt_patterns(top: Parts) -> Iterator[List[Parts]]:
    """Gelfand-Tsetlin patterns with top row `top`, listed top row first"""
    if len(top) == 1:
        yield [top]
        return
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]
    for row in product(*ranges):
        for rest in _gt_patterns(tuple(row)):
            yield [top] + rest


def schur_polynomial_character(lam: PartitionLike, n: int) -> WeightCharacter:
    """Character s_λ(x_1, ..., x_n) of the Weyl module, from Gelfand-Tsetlin patterns"""
    mu = as_partition(lam)
    if mu.length > n:
        return WeightCharacter(n)
    result: Dict[Weight, int] = defaultdict(int)
    for pattern in _gt_patterns(mu.padded(n)):
        sums = [sum(row) for row in reversed(pattern)]  # row lengths 1..n
        weight = (sums[0],) + tuple(sums[k] - sums[k - 1] for k in range(1, n))
        result[weight] += 1
    return WeightCharacter(n, result)


# Restricted rank-three simple characters known exactly, keyed by highest weight
# after peeling determinant factors; None means any characteristic.
_RESTRICTED_GL3: Dict[Parts, Optional[int]] = {
    (): None,
    (1,): None,
    (1, 1): None,
    (2, 1): 2,
}


@lru_cache(maxsize=4096)
def _gl3_oracle(parts: Parts, p: int) -> WeightCharacter:
    if p == 0:
        return schur_polynomial_character(parts, 3)
    restricted, bar = restricted_split(parts, p)
    k = restricted.part(3)
    peeled = tuple(x - k for x in restricted.padded(3))
    key = Partition(peeled).parts
    if key not in _RESTRICTED_GL3 or _RESTRICTED_GL3[key] not in (None, p):
        raise UnsupportedBaseCaseError(
            f"no restricted rank-three character for {Partition(key)} at p={p}"
        )
    base = schur_polynomial_character(key, 3).shift((k, k, k))
    if not bar.parts:
        return base
    return base * _gl3_oracle(bar.parts, p).frobenius(p)


def gl3_simple_character_oracle(lam: PartitionLike, p: int) -> WeightCharacter:
    """
    Character of the simple GL3-module L(λ) in characteristic p.

    Steinberg's tensor product theorem is applied recursively; restricted
    layers are looked up after removing determinant factors.

    Raises:
        ValidityError: λ has more than three parts
        DomainError: p neither 0 nor prime
        UnsupportedBaseCaseError: a restricted layer is outside the known table
    """
    check_characteristic(p)
    mu = as_partition(lam)
    if mu.length > 3:
        raise ValidityError(f"{mu} has more than three parts")
    return _gl3_oracle(mu.parts, p)


def dominant_weight_mult(a: int, b: int, mu: PartitionLike) -> int:
    """dim L(σ_2 + 2μ)^{(a, b, 2)} read directly off the rank-three oracle at p = 2"""
    highest = add_scaled(staircase(2, 2), 2, as_partition(mu).parts)
    if highest.length > 3:
        return 0
    return gl3_simple_character_oracle(highest, 2).multiplicity((a, b, 2))


def a31b_weight_mult_oracle(a: int, b: int, mu: PartitionLike) -> int:
    """
    dim L(2μ)^{(a-2, b-1, 2)} + dim L(2μ)^{(a, b-1, 0)}, the two weights of L(σ_2)
    compatible with the parities of (a, b, 2), evaluated on the rank-three oracle.
    """
    twisted = add_scaled((), 2, as_partition(mu).parts)
    if twisted.length > 3:
        return 0
    character = gl3_simple_character_oracle(twisted, 2)
    return character.multiplicity((a - 2, b - 1, 2)) + character.multiplicity((a, b - 1, 0))
