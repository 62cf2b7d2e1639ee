from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootbounds.errors import InapplicableError
from rootbounds.padic import (
    PAdicApprox,
    hensel_nth_root,
    is_prime,
    vp_int,
    vp_power_pair,
    vp_rat,
)


def trial_division_vp(m: int, p: int) -> int:
    """Independent oracle: repeated exact division."""
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def brute_force_root(a: int, b: int, p: int, n: int, k: int) -> int:
    """Independent oracle: scan all residues r = 1 mod p."""
    mod = p**k
    hits = [r for r in range(1, mod, p) if (b * pow(r, n, mod) - a) % mod == 0]
    assert len(hits) == 1
    return hits[0]


def test_is_prime():
    assert is_prime(2) and is_prime(101) and is_prime(2**61 - 1)
    assert not is_prime(1) and not is_prime(91)


def test_vp_int_examples():
    assert vp_int(18, 3).v == 2
    assert vp_int(1325, 5).v == trial_division_vp(1325, 5) == 2
    assert vp_int(7, 2).v == 0
    assert vp_int(-40, 2).v == 3


def test_vp_int_rejects_zero_and_composite():
    with pytest.raises(ValueError):
        vp_int(0, 5)
    with pytest.raises(InapplicableError):
        vp_int(10, 4)


def test_vp_rat_and_abs_value():
    assert vp_rat(Fraction(9, 5), 3).v == 2
    assert vp_rat(Fraction(1, 25), 5).v == -2
    assert vp_rat(Fraction(1, 25), 5).abs_value() == 25
    assert vp_int(18, 3).abs_value() == Fraction(1, 9)


def test_padic_approx_validation_and_reduce():
    r = PAdicApprox(5, 2, 11)
    assert r.reduce(1) == PAdicApprox(5, 1, 1)
    with pytest.raises(ValueError):
        PAdicApprox(5, 2, 25)
    with pytest.raises(ValueError):
        r.reduce(3)


def test_hensel_6_1_5_3_mod_25():
    r = hensel_nth_root(6, 1, 5, 3, 2)
    assert r.r == 11  # 11**3 = 1331 = 6 mod 25
    assert r.r == brute_force_root(6, 1, 5, 3, 2)


def test_hensel_matches_brute_force_small():
    for p in (3, 5, 7, 11, 13):
        for k in (1, 2, 3):
            for (a, b, n) in ((1 + p, 1, p + 2), (1 + 2 * p**2, 1, 2 * p + 1), (3 * p + 2, 2, p + 2)):
                if a % p == 0 or n % p == 0:
                    continue
                got = hensel_nth_root(a, b, p, n, k).r
                assert got == brute_force_root(a, b, p, n, k), (a, b, p, n, k)


def test_hensel_deep_precision_is_consistent():
    deep = hensel_nth_root(6, 1, 5, 3, 40)
    assert (pow(deep.r, 3, 5**40) - 6) % 5**40 == 0
    assert deep.reduce(2).r == 11


def test_hensel_inapplicable_conditions_are_named():
    cases = {
        "p-prime": (6, 1, 4, 3, 2),
        "n>=3": (6, 1, 5, 2, 2),
        "p|a-b": (7, 1, 5, 3, 2),
        "p∤a": (10, 5, 5, 3, 2),
        "p∤n": (6, 1, 5, 10, 2),
    }
    for cond, args in cases.items():
        with pytest.raises(InapplicableError) as e:
            hensel_nth_root(*args)
        assert e.value.condition == cond


def test_vp_power_pair_example():
    v1, v2 = vp_power_pair(6, 1, 3, 5)
    assert (v1.v, v2.v) == (1, 1)


def test_vp_power_pair_requires_coprime_and_conditions():
    with pytest.raises(ValueError):
        vp_power_pair(10, 5, 3, 5)
    with pytest.raises(InapplicableError):
        vp_power_pair(6, 1, 5, 5)  # p | n
    with pytest.raises(InapplicableError):
        vp_power_pair(7, 1, 3, 5)  # p does not divide x - y


@given(
    st.sampled_from([3, 5, 7, 11, 13, 17]),
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=1, max_value=40),
)
@settings(max_examples=300, deadline=None)
def test_power_pair_identity_random(p, y, m, n):
    # construct p | x - y, gcd(x, y) = 1, p coprime to n
    x = y + p * m
    if gmpy_gcd(x, y) != 1:
        return
    if n % p == 0:
        return
    v1, v2 = vp_power_pair(x, y, n, p)
    assert v1.v == v2.v


def gmpy_gcd(a, b):
    import math

    return math.gcd(a, b)


@given(
    st.sampled_from([3, 5, 7, 11]),
    st.integers(min_value=1, max_value=30),
    st.integers(min_value=2, max_value=8),
)
@settings(max_examples=150, deadline=None)
def test_hensel_lifting_consistency_random(p, m, k):
    a, b, n = 1 + p * m, 1, p + 2
    if a % p == 0:
        return
    fine = hensel_nth_root(a, b, p, n, k)
    coarse = hensel_nth_root(a, b, p, n, k - 1)
    assert fine.reduce(k - 1) == coarse
