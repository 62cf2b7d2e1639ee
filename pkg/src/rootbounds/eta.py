"""The eta closeness parameters used by all the bound evaluators.

eta measures multiplicatively how close a/b is to 1:

* real (window) form: a - b = a**(1 - eta), i.e. eta = ln(a/(a-b)) / ln a
* large-b form: eta = 1 - ln|a-b| / ln b
* p-adic form: |a - b|_p**-1 = a**eta, i.e. eta = E ln p / ln a with
  E the exact power of p dividing a - b

Whenever eta is a rational number (both log arguments are powers of a
common base) we detect it exactly, so that downstream formulas can be
evaluated in exact rational arithmetic instead of interval arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import gmpy2

from .intervals import DEFAULT_PREC, BoundedReal, ln_interval


def power_base(m: int) -> tuple[int, int]:
    """Write m >= 2 as r**k with k maximal (so r is not a perfect power)."""
    if m < 2:
        raise ValueError("need m >= 2")
    for k in range(m.bit_length(), 1, -1):
        r, exact = gmpy2.iroot(m, k)
        if exact:
            return int(r), k
    return m, 1


def log_ratio_exact(m: int, k: int) -> Optional[Fraction]:
    """ln m / ln k as an exact fraction, or None if it is irrational.

    Rational precisely when m and k are powers of a common base
    (m = 1 giving 0 as a degenerate case).
    """
    if k < 2 or m < 1:
        raise ValueError("need k >= 2, m >= 1")
    if m == 1:
        return Fraction(0)
    rm, im = power_base(m)
    rk, ik = power_base(k)
    if rm == rk:
        return Fraction(im, ik)
    return None


@dataclass(frozen=True)
class EtaValue:
    kind: str  # 'real-thm21' | 'real-bm' | 'padic-thm31' | 'free-thm41'
    value: BoundedReal
    exact: Optional[Fraction]
    exact_arg: Fraction  # a/(a-b), b/|a-b|, or p**E depending on kind


def eta_real(a: int, b: int, prec: int = DEFAULT_PREC) -> EtaValue:
    """eta with a - b = a**(1-eta); requires a > b >= 1, lies in (0, 1]."""
    if not (a > b >= 1):
        raise ValueError("need a > b >= 1")
    d = a - b
    arg = Fraction(a, d)
    if d == 1:
        exact: Optional[Fraction] = Fraction(1)
    else:
        lr = log_ratio_exact(d, a)
        exact = None if lr is None else 1 - lr
    if exact is not None:
        value = BoundedReal.from_rat(exact, prec)
    else:
        value = ln_interval(arg, prec).div(ln_interval(a, prec), prec)
    return EtaValue("real-thm21", value, exact, arg)


def eta_bm(a: int, b: int, prec: int = DEFAULT_PREC) -> EtaValue:
    """eta = 1 - ln|a-b| / ln b; requires a != b and b >= 2."""
    if b < 2:
        raise ValueError("need b >= 2")
    if a == b:
        raise ValueError("need a != b")
    d = abs(a - b)
    arg = Fraction(b, d)
    if d == 1:
        exact: Optional[Fraction] = Fraction(1)
    else:
        lr = log_ratio_exact(d, b)
        exact = None if lr is None else 1 - lr
    if exact is not None:
        value = BoundedReal.from_rat(exact, prec)
    else:
        one = BoundedReal.exact(1)
        value = one.sub(ln_interval(d, prec).div(ln_interval(b, prec), prec), prec)
    return EtaValue("real-bm", value, exact, arg)


def eta_padic(a: int, p: int, E: int, prec: int = DEFAULT_PREC) -> EtaValue:
    """eta = E ln p / ln a; requires a >= 2, p >= 2, E >= 1."""
    if a < 2 or p < 2 or E < 1:
        raise ValueError("need a >= 2, p >= 2, E >= 1")
    lr = log_ratio_exact(p**E, a)
    value: BoundedReal
    if lr is not None:
        value = BoundedReal.from_rat(lr, prec)
    else:
        num = ln_interval(p, prec).mul(E, prec)
        value = num.div(ln_interval(a, prec), prec)
    return EtaValue("padic-thm31", value, lr, Fraction(p**E))
