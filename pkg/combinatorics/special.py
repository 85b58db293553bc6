"""
Special pairs

A pair (r, b) is p-special when b has a signed base-p expansion
b = Σ p^i t_i whose digits satisfy |t_i| ≤ r_i and r_i ≡ t_i (mod 2),
r_i being the base-p digits of r. For p = 0 this degenerates to
|b| ≤ r with r - b even. The (l, p) variant peels one quantum layer
of size l before handing over to p.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Set, Tuple

from .errors import DomainError
from .partitions import Partition

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def check_characteristic(p: int) -> None:
    """
    Raises:
        DomainError: p is neither 0 nor a prime
    """
    if p != 0 and not is_prime(p):
        raise DomainError(f"p must be 0 or a prime (p={p})")


@dataclass(frozen=True)
class SpecialParams:
    """Quantum order l ≥ 2 and field characteristic p (0 or prime)"""
    l: int = 2
    p: int = 2

    def __post_init__(self):
        if self.l < 2:
            raise DomainError(f"l must be at least 2 (l={self.l})")
        check_characteristic(self.p)

    def __str__(self) -> str:
        return f"l={self.l}, p={self.p}"


def base_digits(r: int, p: int) -> List[int]:
    """Base-p digits of r, least significant first; [] for r = 0"""
    if r < 0:
        raise DomainError(f"r must be nonnegative (r={r})")
    if p < 2:
        raise DomainError(f"base must be at least 2 (p={p})")
    digits: List[int] = []
    while r:
        r, digit = divmod(r, p)
        digits.append(digit)
    return digits


def is_p_special(r: int, b: int, p: int) -> bool:
    """
    Decide whether (r, b) is p-special.

    Least-significant-digit recursion: the candidate t_0 values lie in
    [-r_0, r_0], share the parity of r_0 and are congruent to b mod p;
    each one leaves the residual (b - t_0)/p for the higher digits.

    Args:
        r: nonnegative integer
        b: signed weight
        p: 0 or a prime

    Returns:
        bool: whether the pair is p-special

    Raises:
        DomainError: r < 0, or p neither 0 nor prime
    """
    if r < 0:
        raise DomainError(f"r must be nonnegative (r={r})")
    check_characteristic(p)
    if p == 0:
        return -r <= b <= r and (r - b) % 2 == 0
    if abs(b) > r or (r - b) % 2:
        return False

    digits = base_digits(r, p)
    # bounds[i] = r // p^i caps |residual| at digit i
    bounds = [r // p ** i for i in range(len(digits) + 1)]
    memo: Dict[Tuple[int, int], bool] = {}

    def solve(i: int, residual: int) -> bool:
        if i == len(digits):
            return residual == 0
        if abs(residual) > bounds[i]:
            return False
        key = (i, residual)
        if key in memo:
            return memo[key]
        r_i = digits[i]
        found = False
        for t in range(-r_i, r_i + 1, 2):
            if (residual - t) % p == 0 and solve(i + 1, (residual - t) // p):
                found = True
                break
        memo[key] = found
        return found

    return solve(0, b)


def is_lp_special(s: int, a: int, params: SpecialParams) -> bool:
    """
    Decide whether (s, a) is (l, p)-special.

    With s = s_0 + l·s̄, look for a_0 in [-s_0, s_0] of the parity of s_0
    and congruent to a mod l such that (s̄, (a - a_0)/l) is p-special.
    """
    if s < 0:
        raise DomainError(f"s must be nonnegative (s={s})")
    l = params.l
    s0, s_bar = s % l, s // l
    for a0 in range(-s0, s0 + 1, 2):
        if (a - a0) % l == 0 and is_p_special(s_bar, (a - a0) // l, params.p):
            return True
    return False


def enumerate_special_two_part(u: int, v: int, p: int) -> List[Partition]:
    """
    Two-part partitions μ = (c, d) with c + d = u + v and (c - d, u - v)
    p-special, by descending c.
    """
    check_characteristic(p)
    n = u + v
    if n < 0:
        return []
    found: List[Partition] = []
    for c in range(n, (n + 1) // 2 - 1, -1):
        d = n - c
        if is_p_special(c - d, u - v, p):
            found.append(Partition((c, d)))
    logger.debug(f"special two-part pairs for u={u}, v={v}, p={p}: {len(found)}")
    return found


def exhaustive_special_values(r: int, p: int) -> Set[int]:
    """Every b with (r, b) p-special, by enumerating all digit vectors"""
    if r < 0:
        raise DomainError(f"r must be nonnegative (r={r})")
    check_characteristic(p)
    if p == 0:
        return set(range(-r, r + 1, 2))
    digits = base_digits(r, p)
    choices = [range(-r_i, r_i + 1, 2) for r_i in digits]
    return {
        sum(t * p ** i for i, t in enumerate(vector))
        for vector in product(*choices)
    }
