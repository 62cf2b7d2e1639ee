from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootbounds.errors import IndeterminateError
from rootbounds.factor import factorize, factorize_rat


def test_factorize_small():
    assert factorize(1) == {}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}
    assert factorize(2**10) == {2: 10}


def test_factorize_beyond_trial_limit():
    p, q = 1_000_003, 1_000_033  # both prime, above the 10**6 trial bound...
    assert factorize(p * q) == {p: 1, q: 1}


def test_factorize_perfect_power_of_large_prime():
    p = 1_000_003
    assert factorize(p**3) == {p: 3}


def test_factorize_budget_exhaustion_is_loud():
    p, q = 2**61 - 1, 2**89 - 1  # Mersenne primes; product far beyond a 1-step budget
    with pytest.raises(IndeterminateError):
        factorize(p * q, budget=1)


def test_factorize_rat_signed_exponents():
    assert factorize_rat(Fraction(9, 10)) == {3: 2, 2: -1, 5: -1}
    assert factorize_rat(Fraction(1)) == {}
    with pytest.raises(ValueError):
        factorize_rat(Fraction(-2, 3))


@given(st.integers(min_value=1, max_value=10**9))
@settings(max_examples=200, deadline=None)
def test_factorize_reconstructs_input(n):
    prod = 1
    for p, e in factorize(n).items():
        prod *= p**e
    assert prod == n
