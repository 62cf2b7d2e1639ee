"""Empirical stress-tests of the bounds.

Certified n-th roots via exact integer n-th roots of shifted integers,
continued-fraction convergents certified by endpoint agreement and
precision doubling, and measured approximation exponents in both the
Archimedean and the p-adic metric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import gmpy2

from .errors import PrecisionCapError
from .intervals import DEFAULT_PREC, MAX_PREC, BoundedReal, ln_interval
from .padic import hensel_nth_root, vp_int

MAX_HENSEL_PREC = 4096  # exponent cap for p**k in the p-adic scan


def real_root(a: int, b: int, n: int, prec: int = DEFAULT_PREC) -> BoundedReal:
    """Interval of width <= 2**-prec around (a/b)**(1/n).

    Endpoints are m/2**prec and (m+1)/2**prec with m an exact integer
    n-th root; containment is certified by exact big-integer comparison
    of the n-th powers of the endpoints against a/b.
    """
    if a < 1 or b < 1 or n < 2:
        raise ValueError("need a, b >= 1 and n >= 2")
    s = prec
    shifted = a << (n * s)
    m, _ = gmpy2.iroot(shifted // b, n)
    m = int(m)
    if m**n * b == shifted:
        v = Fraction(m, 1 << s)
        return BoundedReal.from_rat(v, m.bit_length() + 4)
    assert m**n * b < shifted < (m + 1) ** n * b
    bits = m.bit_length() + 4
    return BoundedReal(
        BoundedReal.from_rat(Fraction(m, 1 << s), bits).lo,
        BoundedReal.from_rat(Fraction(m + 1, 1 << s), bits).hi,
    )


def _cf_of_fraction(q: Fraction, max_terms: int) -> list[int]:
    num, den = q.numerator, q.denominator
    out = []
    while den and len(out) < max_terms:
        t, r = divmod(num, den)
        out.append(t)
        num, den = den, r
    return out


def _common_prefix(xs: list[int], ys: list[int]) -> list[int]:
    out = []
    for x, y in zip(xs, ys):
        if x != y:
            break
        out.append(x)
    return out


@dataclass(frozen=True)
class CFExpansion:
    quotients: list[int]
    convergents: list[tuple[int, int]]
    certified_count: int


def _convergents(quotients: list[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for k, ak in enumerate(quotients):
        if k == 0:
            out.append((ak, 1))
            continue
        pk = ak * out[-1][0] + (out[-2][0] if k >= 2 else 1)
        qk = ak * out[-1][1] + (out[-2][1] if k >= 2 else 0)
        out.append((pk, qk))
    return out


def _certified_quotients(a: int, b: int, n: int, K: int, prec: int) -> list[int]:
    iv = real_root(a, b, n, prec)
    lo = iv.lo_fraction()
    hi = iv.hi_fraction()
    # rational endpoints have finite expansions whose last quotient is
    # ambiguous; drop it before comparing
    cf_lo = _cf_of_fraction(lo, K + 2)[:-1]
    cf_hi = _cf_of_fraction(hi, K + 2)[:-1]
    return _common_prefix(cf_lo, cf_hi)


def cf_expand(a: int, b: int, n: int, K: int, prec: int = DEFAULT_PREC) -> CFExpansion:
    """First K partial quotients of (a/b)**(1/n), each certified.

    Certification: the expansions of the two dyadic endpoints agree, and
    the agreed prefix is stable under precision doubling.  A rational
    root is rejected.
    """
    if K < 1:
        raise ValueError("need K >= 1")
    q = Fraction(a, b)
    rn, num_ok = gmpy2.iroot(q.numerator, n)
    rd, den_ok = gmpy2.iroot(q.denominator, n)
    if num_ok and den_ok:
        raise ValueError(f"rational root {rn}/{rd}")
    p = prec
    quotients: list[int] = []
    while p <= MAX_PREC:
        cur = _certified_quotients(a, b, n, K, p)
        if len(cur) >= K:
            nxt = _certified_quotients(a, b, n, K, 2 * p)
            if _common_prefix(cur, nxt)[:K] == cur[:K]:
                quotients = cur[:K]
                break
        p *= 2
    else:
        quotients = _certified_quotients(a, b, n, K, MAX_PREC)[:K]
    return CFExpansion(quotients, _convergents(quotients), len(quotients))


@dataclass(frozen=True)
class ExponentSample:
    x: int
    y: int
    exponent: BoundedReal


def measure_exponents_real(
    a: int, b: int, n: int, K: int, prec: int = DEFAULT_PREC
) -> list[ExponentSample]:
    """-log|root - p_k/q_k| / log q_k for the first K convergents (q_k >= 2)."""
    cf = cf_expand(a, b, n, K, prec)
    samples = []
    for pk, qk in cf.convergents[: cf.certified_count]:
        if qk < 2:
            continue
        target = Fraction(pk, qk)
        p = prec
        while True:
            iv = real_root(a, b, n, p)
            diff = iv.sub(BoundedReal.from_rat(target, p + target.denominator.bit_length() + 4), p)
            if diff.lo > 0 or diff.hi < 0:
                break
            p *= 2
            if p > MAX_PREC * 8:
                raise PrecisionCapError(f"separating {pk}/{qk} from the root", p)
        w = max(p, 64)
        exponent = (-diff.abs().log(w)).div(ln_interval(qk, w), w)
        samples.append(ExponentSample(pk, qk, exponent))
    return samples


def measure_exponents_padic(
    a: int, b: int, p: int, n: int, H: int, prec: int = DEFAULT_PREC
) -> list[ExponentSample]:
    """Exhaustive scan of coprime x/y = 1 mod p with max(|x|, |y|) <= H.

    For each pair returns v_p(root - x/y) * log p / log max(|x|, |y|).
    The Hensel precision is raised automatically until every valuation
    is determined; x/y with height 1 is skipped (infinite exponent).
    """
    if H < 2:
        raise ValueError("need H >= 2")
    k = max(8, vp_int(a - b, p).v + 2)
    while True:
        root = hensel_nth_root(a, b, p, n, k)
        mod = p**k
        samples = []
        short = False
        for y in range(1, H + 1):
            if y % p == 0:
                continue
            for x in range(-H, H + 1):
                if max(abs(x), abs(y)) < 2:
                    continue
                if (x - y) % p != 0 or math.gcd(x, y) != 1:
                    continue
                t = (y * root.r - x) % mod
                if t == 0:
                    short = True
                    break
                v = vp_int(t, p).v
                if v >= k - 1:
                    short = True  # too close to the precision horizon
                    break
                height = max(abs(x), abs(y))
                w = max(prec, 64)
                exponent = ln_interval(p, w).mul(v, w).div(ln_interval(height, w), w)
                samples.append(ExponentSample(x, y, exponent))
            if short:
                break
        if not short:
            samples.sort(key=lambda s: (s.y, s.x))
            return samples
        k *= 2
        if p**k > 2**MAX_HENSEL_PREC * 2**64:
            raise PrecisionCapError("p-adic scan precision", k)
