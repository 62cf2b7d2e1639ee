"""Shared oracle helpers: all expected transcendental values come from
mpmath at >= 64 decimal digits, independently of the MPFR-backed
implementation under test."""

from fractions import Fraction

from mpmath import mp

ORACLE_DPS = 70


def mp_frac(q: Fraction):
    q = Fraction(q)
    return mp.mpf(q.numerator) / mp.mpf(q.denominator)


def contains_oracle(iv, oracle_value) -> bool:
    """Does the interval contain the high-precision oracle value?

    The oracle carries ~70 digits; a relative slack of 1e-60 absorbs its
    own rounding (exact-point intervals would otherwise miss by 1e-70)
    while staying far below any interval width these tests certify.
    """
    slack = mp.mpf("1e-60") * (1 + abs(oracle_value))
    return (
        mp_frac(iv.lo_fraction()) - slack
        <= oracle_value
        <= mp_frac(iv.hi_fraction()) + slack
    )


def setup_module(_module=None):
    mp.dps = ORACLE_DPS


mp.dps = ORACLE_DPS
