import pytest
from hypothesis import given, strategies as st

from combinatorics.errors import DomainError
from combinatorics.special import (
    SpecialParams,
    base_digits,
    enumerate_special_two_part,
    exhaustive_special_values,
    is_lp_special,
    is_p_special,
    is_prime,
)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_base_digits_least_significant_first():
    assert base_digits(11, 2) == [1, 1, 0, 1]
    assert base_digits(0, 3) == []
    assert base_digits(14, 3) == [2, 1, 1]


@pytest.mark.parametrize(
    "r, b, p, expected",
    [
        (3, 1, 2, True),
        (3, 3, 2, True),
        (2, 0, 2, False),
        (2, 2, 2, True),
        (6, 2, 2, True),
        (8, 2, 2, False),
        (4, 0, 3, False),
        (4, 2, 3, True),
        (4, 0, 0, True),
        (4, 1, 0, False),
        (4, 6, 0, False),
        (0, 0, 5, True),
        (0, 2, 5, False),
    ],
)
def test_is_p_special(r, b, p, expected):
    assert is_p_special(r, b, p) is expected


def test_parity_and_range_rejections():
    assert not is_p_special(5, 2, 3)
    assert not is_p_special(5, 7, 7)


def test_domain_errors():
    with pytest.raises(DomainError):
        is_p_special(3, 1, 4)
    with pytest.raises(DomainError):
        is_p_special(-1, 1, 2)
    with pytest.raises(DomainError):
        SpecialParams(l=1, p=2)
    with pytest.raises(DomainError):
        SpecialParams(l=2, p=6)


def test_special_params_default_and_str():
    params = SpecialParams()
    assert (params.l, params.p) == (2, 2)
    assert str(SpecialParams(l=3, p=0)) == "l=3, p=0"


@pytest.mark.parametrize("p", [2, 3, 5])
@given(r=st.integers(min_value=0, max_value=80))
def test_recursion_matches_digit_vectors(p, r):
    reachable = exhaustive_special_values(r, p)
    assert {b for b in range(-r, r + 1) if is_p_special(r, b, p)} == reachable


@given(st.integers(min_value=0, max_value=200), st.integers(min_value=-200, max_value=200),
       st.sampled_from([0, 2, 3, 5, 7]))
def test_special_pairs_are_symmetric(r, b, p):
    assert is_p_special(r, b, p) == is_p_special(r, -b, p)


@given(st.integers(min_value=0, max_value=100), st.integers(min_value=-100, max_value=100))
def test_characteristic_zero_closed_form(r, b):
    assert is_p_special(r, b, 0) == (abs(b) <= r and (r - b) % 2 == 0)


def test_lp_special():
    params = SpecialParams(l=2, p=2)
    assert is_lp_special(3, 1, params)
    assert is_lp_special(3, 3, params)
    assert not is_lp_special(2, 0, params)
    assert is_lp_special(1, -1, params)
    with pytest.raises(DomainError):
        is_lp_special(-1, 0, params)


@given(st.integers(min_value=0, max_value=60), st.integers(min_value=-60, max_value=60))
def test_lp_special_with_equal_layers_is_p_special(r, b):
    # l = p makes the quantum layer one more base-p digit
    assert is_lp_special(r, b, SpecialParams(l=3, p=3)) == is_p_special(r, b, 3)


def test_enumerate_special_two_part():
    assert [mu.padded(2) for mu in enumerate_special_two_part(2, 1, 2)] == [(3, 0), (2, 1)]
    assert [mu.padded(2) for mu in enumerate_special_two_part(0, 0, 2)] == [(0, 0)]
    assert enumerate_special_two_part(-1, 0, 2) == []


@given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=30),
       st.sampled_from([0, 2, 3]))
def test_enumeration_is_sorted_and_sound(u, v, p):
    found = enumerate_special_two_part(u, v, p)
    firsts = [mu.part(1) for mu in found]
    assert firsts == sorted(firsts, reverse=True)
    for mu in found:
        c, d = mu.padded(2)
        assert c + d == u + v and c >= d
        assert is_p_special(c - d, u - v, p)
    # μ = (u, v) itself is always special when u ≥ v
    if u >= v:
        assert (u, v) in [mu.padded(2) for mu in found]
