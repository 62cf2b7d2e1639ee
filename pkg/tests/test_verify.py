from fractions import Fraction

import pytest
from mpmath import mp

from rootbounds.intervals import ln_interval
from rootbounds.measures import best_bound
from rootbounds.verify import (
    cf_expand,
    measure_exponents_padic,
    measure_exponents_real,
    real_root,
)


def oracle_cf(a, b, n, K):
    """Partial quotients from a 300-digit mpmath root (independent route)."""
    with mp.workdps(300):
        x = mp.root(mp.mpf(a) / b, n)
        out = []
        for _ in range(K):
            f = mp.floor(x)
            out.append(int(f))
            x = 1 / (x - f)
        return out


def test_real_root_exact_case_is_point():
    iv = real_root(8, 1, 3)
    assert iv.is_point() and iv.contains(2)
    assert real_root(16, 81, 4).contains(Fraction(2, 3))


def test_real_root_sqrt2_digits():
    iv = real_root(2, 1, 2, 256)
    assert iv.width() <= Fraction(1, 2**256)
    with mp.workdps(90):
        assert mp.mpf(iv.lo_fraction().numerator) / iv.lo_fraction().denominator <= mp.sqrt(2)
        assert mp.sqrt(2) <= mp.mpf(iv.hi_fraction().numerator) / iv.hi_fraction().denominator


def test_real_root_encloses_target_power():
    iv = real_root(101, 100, 3, 128)
    cube = iv.pow_int(3, 192)
    assert cube.contains(Fraction(101, 100))


def test_cf_cbrt2_first_seven():
    cf = cf_expand(2, 1, 3, 7)
    assert cf.quotients == [1, 3, 1, 5, 1, 1, 4]
    assert cf.certified_count == 7
    assert cf.convergents[0] == (1, 1)
    assert cf.convergents[1] == (4, 3)
    assert cf.convergents[2] == (5, 4)


def test_cf_rejects_rational_root():
    with pytest.raises(ValueError, match="rational root"):
        cf_expand(4, 1, 2, 5)
    with pytest.raises(ValueError, match="rational root"):
        cf_expand(27, 8, 3, 5)


def test_cf_matches_independent_oracle():
    for (a, b, n, K) in ((2, 1, 3, 25), (101, 100, 3, 20), (5, 3, 4, 20), (2, 1, 2, 30)):
        cf = cf_expand(a, b, n, K)
        assert cf.quotients == oracle_cf(a, b, n, K), (a, b, n)


def test_cf_convergent_determinant_identity():
    cf = cf_expand(2, 1, 3, 15)
    cv = cf.convergents
    for k in range(1, len(cv)):
        pk, qk = cv[k]
        pk1, qk1 = cv[k - 1]
        assert pk * qk1 - pk1 * qk == (-1) ** (k - 1)
        assert Fraction(pk, qk) != Fraction(pk1, qk1)


def test_real_exponents_straddle_two():
    samples = measure_exponents_real(2, 1, 3, 12)
    assert samples  # q >= 2 reached
    for s in samples:
        # convergents approximate to order better than q**2, so the
        # measured exponent sits above 2 up to the next-denominator slack
        assert s.exponent.cmp_gt(Fraction(19, 10)) is True
    # small denominators can exceed the degree because the measure's
    # constant is not 1 (5/4 approximates cbrt(2) to order 3.33) ...
    assert any(s.exponent.cmp_gt(3) for s in samples)
    # ... but once q is past the constant's reach the exponents drop
    # below the degree, consistent with the measure statement
    for s in samples:
        if s.y >= 100:
            assert s.exponent.cmp_lt(3) is True, (s.x, s.y)


def test_real_exponents_against_oracle_values():
    samples = measure_exponents_real(2, 1, 3, 6)
    with mp.workdps(80):
        root = mp.cbrt(2)
        for s in samples:
            oracle = -mp.ln(abs(root - mp.mpf(s.x) / s.y)) / mp.ln(s.y)
            lo = s.exponent.lo_fraction()
            hi = s.exponent.hi_fraction()
            assert mp.mpf(lo.numerator) / lo.denominator <= oracle
            assert oracle <= mp.mpf(hi.numerator) / hi.denominator


def test_padic_exponent_scan_6_1_5_3():
    samples = measure_exponents_padic(6, 1, 5, 3, 20)
    by_pair = {(s.x, s.y): s for s in samples}
    assert (11, 1) in by_pair  # 11**3 = 1331 = 6 mod 25: valuation >= 2
    s = by_pair[(11, 1)]
    # 11 agrees with the root mod 5**2 (11**3 = 1331 = 6 mod 25), so the
    # valuation is at least 2 and the exponent at least 2 ln 5 / ln 11
    v = s.exponent.mul(ln_interval(11, 96), 96).div(ln_interval(5, 96), 96)
    assert v.contains(2) and v.cmp_gt(Fraction(3, 2)) is True
    # every sampled pair satisfies the congruence class constraint
    for (x, y) in by_pair:
        assert (x - y) % 5 == 0
        assert max(abs(x), abs(y)) >= 2
    # deterministic ordering: sorted by (y, x)
    assert [(s.y, s.x) for s in samples] == sorted((s.y, s.x) for s in samples)


def test_padic_exponents_match_direct_valuation():
    samples = measure_exponents_padic(6, 1, 5, 3, 15)
    for s in samples:
        h = max(abs(s.x), abs(s.y))
        # exponent = v * ln 5 / ln h for an integer v >= 1
        v = s.exponent.mul(ln_interval(h, 96), 96).div(ln_interval(5, 96), 96)
        cand = round(float(v.lo_fraction()))
        assert v.contains(cand) and cand >= 1
