"""p-adic valuations and Hensel lifting of the distinguished n-th root.

For p | a-b with p coprime to a, b and n, the polynomial b*X**n - a has a
unique root in Z_p congruent to 1 mod p.  ``hensel_nth_root`` constructs
its residue mod p**k by Newton iteration with precision doubling: the
derivative n*b at the starting point 1 is a p-adic unit, so the simple
root case of Hensel's lemma applies for every p, including p = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2

from .errors import InapplicableError


def is_prime(p: int) -> bool:
    # BPSW + extra Miller-Rabin rounds; no pseudoprime below 2**64 is known
    return p >= 2 and bool(gmpy2.is_prime(p, 40))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InapplicableError("p-prime", f"{p} is not prime")


@dataclass(frozen=True)
class Valuation:
    v: int
    p: int

    def abs_value(self) -> Fraction:
        """|x|_p = p**(-v), normalized so |p|_p = 1/p."""
        if self.v >= 0:
            return Fraction(1, self.p**self.v)
        return Fraction(self.p ** (-self.v))


@dataclass(frozen=True)
class PAdicApprox:
    """A residue r mod p**k standing for a p-adic number to precision k."""

    p: int
    k: int
    r: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("precision k must be >= 1")
        if not 0 <= self.r < self.p**self.k:
            raise ValueError("residue out of range")

    def reduce(self, k: int) -> "PAdicApprox":
        if k > self.k:
            raise ValueError("cannot increase precision by reduction")
        return PAdicApprox(self.p, k, self.r % self.p**k)


def vp_int(m: int, p: int) -> Valuation:
    """Exact power of p dividing m; m = 0 is rejected (infinite valuation)."""
    if m == 0:
        raise ValueError("v_p(0) is infinite")
    _require_prime(p)
    return Valuation(int(gmpy2.remove(abs(m), p)[1]), p)


def vp_rat(q: Union[Fraction, int], p: int) -> Valuation:
    if q == 0:
        raise ValueError("v_p(0) is infinite")
    q = Fraction(q)
    return Valuation(vp_int(q.numerator, p).v - vp_int(q.denominator, p).v, p)


def hensel_nth_root(a: int, b: int, p: int, n: int, k: int) -> PAdicApprox:
    """Residue mod p**k of the root of b*X**n - a with r = 1 mod p.

    Requires p | a-b, p coprime to a, b, n, and n >= 3.
    """
    _require_prime(p)
    if n < 3:
        raise InapplicableError("n>=3", f"n = {n}")
    if k < 1:
        raise ValueError("precision k must be >= 1")
    if (a - b) % p != 0:
        raise InapplicableError("p|a-b", f"{p} does not divide {a - b}")
    if a % p == 0:
        raise InapplicableError("p∤a", f"{p} divides a")
    if b % p == 0:
        raise InapplicableError("p∤b", f"{p} divides b")
    if n % p == 0:
        raise InapplicableError("p∤n", f"{p} divides n")

    r = 1
    cur = 1
    while cur < k:
        cur = min(2 * cur, k)
        mod = p**cur
        fr = (b * pow(r, n, mod) - a) % mod
        dr = (n * b * pow(r, n - 1, mod)) % mod
        r = (r - fr * pow(dr, -1, mod)) % mod
    mod = p**k
    assert (b * pow(r, n, mod) - a) % mod == 0 and r % p == 1
    return PAdicApprox(p, k, r)


def vp_power_pair(x: int, y: int, n: int, p: int) -> tuple[Valuation, Valuation]:
    """(v_p(x/y - 1), v_p((x/y)**n - 1)); equal when p | x-y and p ∤ n.

    The equality comes from gcd(x-y, (x**n - y**n)/(x-y)) = gcd(x-y, n).
    """
    _require_prime(p)
    if gmpy2.gcd(x, y) != 1:
        raise ValueError("need gcd(x, y) = 1")
    if n % p == 0:
        raise InapplicableError("p∤n", f"{p} divides n")
    if (x - y) % p != 0:
        raise InapplicableError("p|x-y", f"{p} does not divide {x - y}")
    # gcd(x,y)=1 and p | x-y force p ∤ y, so v_p of the quotients reduces
    # to v_p of the numerators
    v1 = vp_int(x - y, p)
    v2 = vp_int(x**n - y**n, p)
    return v1, v2
