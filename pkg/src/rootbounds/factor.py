"""Integer factorization with an explicit work budget.

Trial division up to 10**6, then Brent's variant of Pollard rho with a
bounded iteration count.  Running out of budget raises
``IndeterminateError`` instead of guessing: the multiplicative
independence check built on top must never be silently wrong.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2

from .errors import IndeterminateError
from .padic import is_prime

TRIAL_LIMIT = 10**6
RHO_BUDGET = 2_000_000


def _pollard_brent(n: int, budget: int) -> int:
    """A nontrivial factor of composite odd n, or raise on exhausted budget."""
    n = gmpy2.mpz(n)
    for c in range(1, 100):
        x = y = gmpy2.mpz(2)
        d = gmpy2.mpz(1)
        steps = 0
        while d == 1:
            if steps >= budget:
                raise IndeterminateError(f"factorization budget exceeded for {int(n)}")
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gmpy2.gcd(abs(x - y), n)
            steps += 1
        if d != n:
            return int(d)
    raise IndeterminateError(f"factorization failed for {int(n)}")


def factorize(n: int, budget: int = RHO_BUDGET) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("need n >= 1")
    factors: dict[int, int] = {}
    rem = n
    for p in (2, 3, 5):
        while rem % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rem //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d <= TRIAL_LIMIT and d * d <= rem:
        while rem % d == 0:
            factors[d] = factors.get(d, 0) + 1
            rem //= d
        d += wheel[i]
        i = (i + 1) % 8
    stack = [rem] if rem > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        # perfect powers first: rho degenerates on them
        for k in range(m.bit_length(), 1, -1):
            r, exact = gmpy2.iroot(m, k)
            if exact:
                stack.extend([int(r)] * k)
                break
        else:
            f = _pollard_brent(m, budget)
            stack.extend([f, m // f])
    return factors


def factorize_rat(q: Fraction, budget: int = RHO_BUDGET) -> dict[int, int]:
    """Signed-exponent factorization of a positive rational in lowest terms."""
    if q <= 0:
        raise ValueError("need q > 0")
    vec = dict(factorize(q.numerator, budget))
    for p, e in factorize(q.denominator, budget).items():
        vec[p] = vec.get(p, 0) - e
    return {p: e for p, e in vec.items() if e != 0}
