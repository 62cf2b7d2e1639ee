import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootbounds.thue_mahler import (
    TMInstance,
    TMSolution,
    check_thm41,
    eq71_decompose,
    strip_primes,
    tm_search,
)


def make(b=1000, c=9, d=1, n=25, primes=(3,), eta=Fraction(3, 10), **kw):
    return TMInstance(b=b, c=c, d=d, n=n, primes=primes, eta=eta, **kw)


def naive_search(inst, X):
    """Independent double-loop reference with Fraction arithmetic."""
    hits = []
    for x in range(-X, X + 1):
        for y in range(-X, X + 1):
            if x * y == 0 or math.gcd(x, y) != 1:
                continue
            N = (inst.b + inst.c) * x**inst.n - inst.b * y**inst.n
            if N == 0:
                continue
            q = Fraction(N, inst.d)
            if q.denominator != 1 or q <= 0:
                continue
            m = q.numerator
            z = []
            for p in inst.primes:
                v = 0
                while m % p == 0:
                    m //= p
                    v += 1
                z.append(v)
            if m == 1:
                hits.append(TMSolution(x, y, tuple(z)))
    return sorted(hits, key=lambda s: (s.x, s.y))


def test_instance_validation():
    with pytest.raises(ValueError):
        make(b=1)
    with pytest.raises(ValueError):
        make(d=0)
    with pytest.raises(ValueError):
        make(d=1001)  # |d| > b
    with pytest.raises(ValueError):
        make(n=2)
    with pytest.raises(ValueError):
        make(primes=(4,))
    with pytest.raises(ValueError):
        make(primes=(3, 3))
    with pytest.raises(ValueError):
        make(eta=Fraction(3, 2))


def test_check_thm41_baseline_instance():
    conds = {c.name: c for c in check_thm41(make())}
    assert conds["eta-interval"].passed is True
    # 9**10 < 1000**7, i.e. log 9 / log 1000 < 7/10
    assert conds["log c/log b < 1-eta"].passed is True
    # 3**(2*10) > 1009**3
    assert conds["p=3 closeness"].passed is True
    assert conds["gcd(n, prod p(p-1))=1"].passed is True
    assert conds["n-threshold"].passed is None
    assert conds["n-threshold"].required is True
    opt = conds["n>=10000/eta (single-prime variant)"]
    assert opt.required is False
    assert opt.passed is False  # 25 < 10000 * 10 / 3


def test_check_thm41_failures():
    # eta = 1/2 leaves no room for a single prime: needs eta < 1/2 strictly
    conds = {c.name: c for c in check_thm41(make(eta=Fraction(1, 2)))}
    assert conds["eta-interval"].passed is False
    # n sharing a factor with p*(p-1)
    conds = {c.name: c for c in check_thm41(make(n=9))}
    assert conds["gcd(n, prod p(p-1))=1"].passed is False
    # c too large for the eta budget: log 999 / log 1000 > 7/10
    conds = {c.name: c for c in check_thm41(make(c=999))}
    assert conds["log c/log b < 1-eta"].passed is False
    # prime not dividing c deeply enough
    conds = {c.name: c for c in check_thm41(make(primes=(5,)))}
    assert conds["p=5 closeness"].passed is False


def test_check_thm41_exact_power_comparison():
    # the closeness check is the exact integer comparison
    # p**(v_p(c)*den) > (b+c)**num; with eta = 3/5 it becomes
    # 3**10 > 1009**3, which fails
    conds = {c.name: c for c in check_thm41(make(eta=Fraction(3, 5)))}
    assert conds["p=3 closeness"].passed is False
    assert 3**10 < 1009**3


def test_strip_primes():
    assert strip_primes(360, (2, 3)) == (5, [3, 2])
    assert strip_primes(-9, (3,)) == (-1, [2])
    assert strip_primes(7, (2, 3)) == (7, [0, 0])
    with pytest.raises(ValueError):
        strip_primes(0, (2,))
    with pytest.raises(ValueError):
        strip_primes(6, (2, 2))


@given(
    st.integers(min_value=-(10**6), max_value=10**6).filter(lambda v: v != 0),
    st.sets(st.sampled_from([2, 3, 5, 7, 11]), min_size=1, max_size=3),
)
@settings(max_examples=200, deadline=None)
def test_strip_primes_round_trip(N, primes):
    primes = tuple(sorted(primes))
    residual, z = strip_primes(N, primes)
    prod = residual
    for p, zj in zip(primes, z):
        prod *= p**zj
        assert residual % p != 0
    assert prod == N


def test_tm_search_baseline_only_trivial_solution():
    res = tm_search(make(x_cap=50))
    assert res.solutions == [TMSolution(1, 1, (2,))]  # 1009 - 1000 = 9 = 1 * 3**2
    assert res.degenerate == []


def test_tm_search_negative_d_odd_n():
    res = tm_search(make(d=-1, x_cap=30))
    assert res.solutions == [TMSolution(-1, -1, (2,))]


def test_tm_search_d_equals_c():
    res = tm_search(make(d=9, x_cap=30))
    # 1009 - 1000 = 9 = 9 * 3**0
    assert TMSolution(1, 1, (0,)) in res.solutions
    assert all(s.z[0] == 0 or 9 * 3 ** s.z[0] == (1009 * s.x**25 - 1000 * s.y**25) for s in res.solutions)


def test_tm_search_matches_naive_reference():
    for d in (1, -1, 9):
        inst = make(d=d, x_cap=30)
        got = tm_search(inst)
        assert got.solutions == naive_search(inst, 30), d


def test_tm_search_z_cap_filters():
    res = tm_search(make(x_cap=30, z_cap=1))
    assert res.solutions == []  # the (1,1) solution needs z = 2


def test_tm_search_term_size_guard():
    with pytest.raises(OverflowError):
        tm_search(make(n=10**6, x_cap=2000))


def test_eq71_decomposition_on_solution():
    inst = make()
    rec = eq71_decompose(inst, 1, 1)
    assert rec.N == 9
    assert rec.arch_factor == 9
    assert rec.padic_factors == (Fraction(1, 9),)
    assert rec.residual == 1
    assert rec.z == (2,)
    assert rec.product == 1


def test_eq71_decomposition_on_non_solution():
    inst = make()
    rec = eq71_decompose(inst, 2, 3)
    N = 1009 * 2**25 - 1000 * 3**25
    assert rec.N == N
    assert rec.arch_factor == abs(N)
    assert rec.product == abs(rec.residual)
    # |N| * prod |N|_p reconstructs the prime-stripped residual
    back = abs(rec.residual)
    for p, zj in zip(inst.primes, rec.z):
        back *= p**zj
    assert back == abs(N)


def test_eq71_rejects_degenerate():
    inst = make()
    with pytest.raises(ValueError):
        eq71_decompose(inst, 1, 0)
