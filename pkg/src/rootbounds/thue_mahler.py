"""Desk-scale verification of Thue-Mahler families (b+c)x^n - by^n = d*prod p_j^z_j.

The search is unconditional exhaustive enumeration with post-hoc
hypothesis reporting: the n-threshold constant of the family theorem is
not numeric, so nothing can be refuted here -- the search only confirms
"no counterexample below the cap".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import gmpy2

from .measures import Condition
from .padic import is_prime

MAX_TERM_BITS = 10**7  # cap on intermediate (b+c)*X**n sizes


@dataclass(frozen=True)
class TMInstance:
    b: int
    c: int
    d: int
    n: int
    primes: tuple[int, ...]
    eta: Fraction
    x_cap: int = 100
    z_cap: Optional[int] = None  # None = automatic ceiling log_p|N|

    def __post_init__(self):
        if self.b < 2:
            raise ValueError("need b >= 2")
        if self.c < 1:
            raise ValueError("need c >= 1")
        if self.d == 0 or abs(self.d) > self.b:
            raise ValueError("need 0 < |d| <= b")
        if self.n < 3:
            raise ValueError("need n >= 3")
        if len(set(self.primes)) != len(self.primes) or not self.primes:
            raise ValueError("primes must be distinct and nonempty")
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if not 0 < self.eta < 1:
            raise ValueError("need eta in (0, 1)")
        if self.x_cap < 1:
            raise ValueError("need x_cap >= 1")


def check_thm41(inst: TMInstance) -> list[Condition]:
    """Full hypothesis ledger for the family theorem.

    Log inequalities are decided by exact integer power comparisons.
    The n-threshold involves an unspecified effective constant and is
    reported as not checkable; the single-prime draft variant's explicit
    threshold n >= 10000/eta is reported as an optional extra when s = 1.
    """
    s = len(inst.primes)
    num, den = inst.eta.numerator, inst.eta.denominator
    conds = [
        Condition(
            "eta-interval",
            Fraction(0) < inst.eta < Fraction(1, s + 1),
            f"eta = {inst.eta}, must lie strictly inside (0, 1/{s + 1})",
        )
    ]
    # log c / log b < 1 - eta  <=>  c**den < b**(den - num)
    conds.append(
        Condition(
            "log c/log b < 1-eta",
            inst.c**den < inst.b ** (den - num) if num < den else False,
        )
    )
    # log|c|_p^-1 / log(b+c) > eta  <=>  p**(v_p(c)*den) > (b+c)**num
    for p in inst.primes:
        v = int(gmpy2.remove(inst.c, p)[1])
        conds.append(
            Condition(
                f"p={p} closeness",
                p ** (v * den) > (inst.b + inst.c) ** num,
                f"v_{p}(c) = {v}",
            )
        )
    m = 1
    for p in inst.primes:
        m *= p * (p - 1)
    conds.append(Condition("gcd(n, prod p(p-1))=1", math.gcd(inst.n, m) == 1))
    conds.append(
        Condition(
            "n-threshold",
            None,
            "n >= kappa*(s/eta)*log(s/eta)^2 NOT CHECKABLE: kappa unspecified",
        )
    )
    if s == 1:
        conds.append(
            Condition(
                "n>=10000/eta (single-prime variant)",
                inst.n * num >= 10000 * den,
                required=False,
            )
        )
    return conds


def strip_primes(N: int, primes: tuple[int, ...]) -> tuple[int, list[int]]:
    """Write N = residual * prod p_j**z_j with residual coprime to the p_j.

    The sign is carried on the residual.
    """
    if N == 0:
        raise ValueError("N must be nonzero")
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    sign = -1 if N < 0 else 1
    rem = abs(N)
    z = []
    for p in primes:
        rem, v = gmpy2.remove(rem, p)
        z.append(int(v))
    return sign * int(rem), z


@dataclass(frozen=True)
class TMSolution:
    x: int
    y: int
    z: tuple[int, ...]


@dataclass(frozen=True)
class TMSearchResult:
    solutions: list[TMSolution] = field(default_factory=list)
    degenerate: list[TMSolution] = field(default_factory=list)  # xy = 0


def tm_search(inst: TMInstance) -> TMSearchResult:
    """Complete enumeration of coprime |x|, |y| <= x_cap.

    Every accepted solution is re-verified by exact evaluation; output is
    sorted lexicographically by (x, y).
    """
    b, c, d, n = inst.b, inst.c, inst.d, inst.n
    X = inst.x_cap
    if (X.bit_length() * n + max(b + c, b).bit_length()) > MAX_TERM_BITS:
        raise OverflowError(f"intermediate size cap exceeded at |x|=|y|={X}")
    pows = {v: v**n for v in range(-X, X + 1)}
    result = TMSearchResult()
    for x in range(-X, X + 1):
        for y in range(-X, X + 1):
            if math.gcd(x, y) != 1:
                continue
            N = (b + c) * pows[x] - b * pows[y]
            if N == 0:
                continue
            # N = d * prod p**z requires N/d to be an exact positive
            # product of the chosen primes (d itself may share factors
            # with them, so divide before stripping)
            if N % d != 0:
                continue
            q = N // d
            if q <= 0:
                continue
            residual, z = strip_primes(q, inst.primes)
            if residual != 1:
                continue
            if inst.z_cap is not None and any(zj > inst.z_cap for zj in z):
                continue
            prod = 1
            for p, zj in zip(inst.primes, z):
                prod *= p**zj
            assert (b + c) * x**n - b * y**n == d * prod
            sol = TMSolution(x, y, tuple(z))
            (result.degenerate if x * y == 0 else result.solutions).append(sol)
    result.solutions.sort(key=lambda s: (s.x, s.y))
    result.degenerate.sort(key=lambda s: (s.x, s.y))
    return result


@dataclass(frozen=True)
class Eq71Record:
    x: int
    y: int
    N: int
    arch_factor: Fraction  # b*|y|**n * |((b+c)/b)*(x/y)**n - 1|, exactly |N|
    padic_factors: tuple[Fraction, ...]  # |N|_{p_j} = p_j**-z_j
    residual: int
    z: tuple[int, ...]
    product: Fraction  # |N| * prod |N|_{p_j} = |residual|


def eq71_decompose(inst: TMInstance, x: int, y: int) -> Eq71Record:
    """Exact factor decomposition of (b+c)x^n - by^n into its Archimedean
    and p-adic absolute values."""
    if y == 0:
        raise ValueError("need y != 0")
    b, c, n = inst.b, inst.c, inst.n
    N = (b + c) * x**n - b * y**n
    if N == 0:
        raise ValueError("N = 0")
    residual, z = strip_primes(N, inst.primes)
    arch = b * abs(y) ** n * abs(Fraction(b + c, b) * Fraction(x, y) ** n - 1)
    assert arch == abs(N)
    padic = tuple(Fraction(1, p**zj) for p, zj in zip(inst.primes, z))
    product = Fraction(abs(N))
    for f in padic:
        product *= f
    assert product == abs(residual)
    return Eq71Record(x, y, N, arch, padic, residual, tuple(z), product)
