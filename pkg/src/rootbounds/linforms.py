"""Lower bounds for linear forms in two logarithms.

Two imported estimates are evaluated with full hypothesis checking:

* the Archimedean bounds for |v log(a1/a2) - u log(b1/b2)| with the
  closeness parameter E (both the 8550-constant and the 35.1-constant
  shape), and
* the p-adic upper bound for v_p((x1/y1)**b - x2/y2) with the
  53.8-constant shape.

The caller chooses A, B (resp. A1, A2); convenience builders supply the
minimal legal values.  All evaluation is outward-rounded interval
arithmetic; hypothesis comparisons escalate precision until they resolve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InapplicableError
from .factor import factorize_rat
from .intervals import (
    DEFAULT_PREC,
    BoundedReal,
    decide,
    e_interval,
    ln_interval,
)
from .padic import is_prime, vp_rat

C_ARCH_51 = 8550
C_ARCH_52 = Fraction(351, 10)
C_BU = Fraction(269, 5)  # 53.8
LOG_U2_SHIFT = Fraction(47, 100)
BU_SHIFT = Fraction(2, 5)


def mult_independent(r1: Fraction, r2: Fraction) -> bool:
    """True iff the prime-exponent vectors of r1, r2 are not proportional.

    Raises IndeterminateError if either rational cannot be factored
    within the work budget.
    """
    if r1 <= 0 or r2 <= 0:
        raise ValueError("need positive rationals")
    v1 = factorize_rat(Fraction(r1))
    v2 = factorize_rat(Fraction(r2))
    if not v1 or not v2:
        return False  # a zero exponent vector is proportional to anything
    if set(v1) != set(v2):
        return True
    primes = sorted(v1)
    p0 = primes[0]
    e0, f0 = v1[p0], v2[p0]
    return any(v1[p] * f0 != v2[p] * e0 for p in primes[1:])


@dataclass(frozen=True)
class ArchLinForm:
    a1: int
    a2: int
    b1: int
    b2: int
    u: int
    v: int
    A: BoundedReal
    B: BoundedReal


def minimal_height(x: int, prec: int = DEFAULT_PREC) -> BoundedReal:
    """Smallest legal A for numerator x: max{x, e}, as a dyadic point."""
    if x >= 3:
        return BoundedReal.exact(x)
    hi = e_interval(prec).hi
    return BoundedReal(hi, hi)


def arch_form(
    a1: int,
    a2: int,
    b1: int,
    b2: int,
    u: int,
    v: int,
    A: Optional[BoundedReal] = None,
    B: Optional[BoundedReal] = None,
    prec: int = DEFAULT_PREC,
) -> ArchLinForm:
    return ArchLinForm(
        a1, a2, b1, b2, u, v,
        A if A is not None else minimal_height(a1, prec),
        B if B is not None else minimal_height(b1, prec),
    )


def _check_arch(f: ArchLinForm, prec: int) -> None:
    if min(f.a1, f.a2, f.b1, f.b2, f.u, f.v) < 1:
        raise InapplicableError("positivity")
    if f.a1 <= f.a2 or f.b1 <= f.b2:
        raise InapplicableError("ratio>1")
    e_hi = e_interval(prec).hi
    if f.A.lo < f.a1 or f.A.lo < e_hi:
        raise InapplicableError("A>=max(a1,e)")
    if f.B.lo < f.b1 or f.B.lo < e_hi:
        raise InapplicableError("B>=max(b1,e)")
    if not mult_independent(Fraction(f.a1, f.a2), Fraction(f.b1, f.b2)):
        raise InapplicableError("dependence", "a1/a2 and b1/b2 multiplicatively dependent")


def arch_E(f: ArchLinForm, prec: int = DEFAULT_PREC) -> BoundedReal:
    """E = 1 + min{log A / log(a1/a2), log B / log(b1/b2)}."""
    qa = ln_interval(Fraction(f.a1, f.a2), prec)
    qb = ln_interval(Fraction(f.b1, f.b2), prec)
    ea = f.A.log(prec).div(qa, prec)
    eb = f.B.log(prec).div(qb, prec)
    return ea.min_with(eb, prec).add(1, prec)


def _check_E_range(f: ArchLinForm, prec: int) -> None:
    def ge15(pr: int) -> Optional[bool]:
        return arch_E(f, pr).cmp_ge(15)

    def below_cap(pr: int) -> Optional[bool]:
        E = arch_E(f, pr)
        a32 = f.A.pow_int(3, pr).rootn(2, pr)
        b32 = f.B.pow_int(3, pr).rootn(2, pr)
        return E.cmp_le(a32.min_with(b32, pr))

    if not decide(ge15, prec, what="E >= 15"):
        raise InapplicableError("E-range", "E < 15")
    if not decide(below_cap, prec, what="E <= min(A^1.5, B^1.5)"):
        raise InapplicableError("E-range", "E > min(A^1.5, B^1.5)")


def _arch_parts(f: ArchLinForm, prec: int):
    logA = f.A.log(prec)
    logB = f.B.log(prec)
    logE = arch_E(f, prec).log(prec)
    uprime = BoundedReal.exact(f.u).div(logA, prec).add(
        BoundedReal.exact(f.v).div(logB, prec), prec
    )
    log_uprime = uprime.log(prec)
    return logA, logB, logE, log_uprime


def arch_bound_51(f: ArchLinForm, prec: int = DEFAULT_PREC) -> BoundedReal:
    """Certified lower bound (the lo endpoint) for log|v log(a1/a2) - u log(b1/b2)|,
    8550-constant shape."""
    _check_arch(f, prec)
    _check_E_range(f, prec)
    logA, logB, logE, log_uprime = _arch_parts(f, prec)
    log_u1 = log_uprime.add(logE, prec).max_with(
        logE.mul(150, prec).add(600, prec), prec
    )
    mag = (
        logA.mul(logB, prec)
        .mul(log_u1, prec)
        .mul(logE.add(4, prec), prec)
        .mul(C_ARCH_51, prec)
        .div(logE.pow_int(3, prec), prec)
    )
    return -mag


def arch_bound_52(f: ArchLinForm, prec: int = DEFAULT_PREC) -> BoundedReal:
    """Same linear form, 35.1-constant shape (squared log U2 term)."""
    _check_arch(f, prec)
    _check_E_range(f, prec)
    logA, logB, logE, log_uprime = _arch_parts(f, prec)
    log_u2 = log_uprime.add(logE.log(prec), prec).add(LOG_U2_SHIFT, prec).max_with(
        logE.mul(10, prec), prec
    )
    mag = (
        logA.mul(logB, prec)
        .mul(log_u2.pow_int(2, prec), prec)
        .mul(C_ARCH_52, prec)
        .div(logE.pow_int(3, prec), prec)
    )
    return -mag


@dataclass(frozen=True)
class PadicLinForm:
    x1: int
    y1: int
    x2: int
    y2: int
    b: int
    p: int
    E: BoundedReal
    A1: BoundedReal
    A2: BoundedReal
    bprime: BoundedReal
    E_exact: Optional[int] = None


def padic_form(
    x1: int,
    y1: int,
    x2: int,
    y2: int,
    b: int,
    p: int,
    E: Optional[int] = None,
    A1: Optional[BoundedReal] = None,
    A2: Optional[BoundedReal] = None,
    prec: int = DEFAULT_PREC,
) -> PadicLinForm:
    """Builder supplying the minimal legal E and A1, A2."""
    if y1 != 0 and Fraction(x1, y1) == 1:
        raise InapplicableError("E too small", "x1/y1 = 1")
    if E is None:
        E = vp_rat(Fraction(x1, y1) - 1, p).v
    if E < 1:
        raise InapplicableError("E too small", f"v_p(x1/y1 - 1) = {E}")
    if A1 is None:
        A1 = BoundedReal.exact(max(abs(x1), abs(y1), p**E))
    if A2 is None:
        A2 = BoundedReal.exact(max(abs(x2), abs(y2), p**E))
    E_iv = BoundedReal.exact(E)
    bprime = BoundedReal.exact(b).div(A2.log(prec), prec).add(
        BoundedReal.exact(1).div(A1.log(prec), prec), prec
    )
    return PadicLinForm(x1, y1, x2, y2, b, p, E_iv, A1, A2, bprime, E)


def padic_bound_bu(f: PadicLinForm, prec: int = DEFAULT_PREC) -> BoundedReal:
    """Certified upper bound (the hi endpoint) for v_p((x1/y1)**b - x2/y2)."""
    if not is_prime(f.p):
        raise InapplicableError("p-prime")
    if f.b < 1 or f.b % f.p == 0:
        raise InapplicableError("p∤b")
    if 0 in (f.x1, f.y1, f.x2, f.y2):
        raise InapplicableError("nonzero")
    r1 = Fraction(f.x1, f.y1)
    r2 = Fraction(f.x2, f.y2)
    if r1 == 1:
        raise InapplicableError("E too small", "x1/y1 = 1")
    v1 = vp_rat(r1 - 1, f.p).v
    if f.E.cmp_le(v1) is not True:
        raise InapplicableError("E too small", f"v_p(x1/y1 - 1) = {v1} < E")
    if f.E.cmp_gt(Fraction(1, f.p - 1)) is not True:
        raise InapplicableError("E too small", "E <= 1/(p-1)")
    if f.p == 2:
        if r2 == 1 or vp_rat(r2 - 1, 2).v < 2:
            raise InapplicableError("p=2 condition", "v_2(x2/y2 - 1) < 2")
    if not mult_independent(r1, r2):
        raise InapplicableError("dependence")
    logp = ln_interval(f.p, prec)
    elogp = f.E.mul(logp, prec)
    for Ai, name in ((f.A1, "A1"), (f.A2, "A2")):
        if Ai.lo <= 1:
            raise InapplicableError(f"{name}>1")
        # exact E admits an exact comparison, which also settles the
        # boundary case A_i = p**E that interval logs cannot resolve
        if f.E_exact is not None:
            ok = Ai.lo >= f.p**f.E_exact
        else:
            ok = elogp.cmp_le(Ai.log(prec)) is True
        if not ok:
            raise InapplicableError(f"log {name} >= max(log|x|, log|y|, E log p)")
    if f.A1.lo < max(abs(f.x1), abs(f.y1)) or f.A2.lo < max(abs(f.x2), abs(f.y2)):
        raise InapplicableError("log A_i >= max(log|x_i|, log|y_i|)")

    logA1 = f.A1.log(prec)
    logA2 = f.A2.log(prec)
    bprime = BoundedReal.exact(f.b).div(logA2, prec).add(
        BoundedReal.exact(1).div(logA1, prec), prec
    )
    m = (
        bprime.log(prec)
        .add(elogp.log(prec), prec)
        .add(BU_SHIFT, prec)
        .max_with(elogp.mul(4, prec), prec)
        .max_with(5, prec)
    )
    return (
        m.pow_int(2, prec)
        .mul(logA1, prec)
        .mul(logA2, prec)
        .mul(C_BU, prec)
        .div(f.E.pow_int(3, prec).mul(logp.pow_int(4, prec), prec), prec)
    )


__all__ = [
    "ArchLinForm",
    "PadicLinForm",
    "arch_E",
    "arch_bound_51",
    "arch_bound_52",
    "arch_form",
    "minimal_height",
    "mult_independent",
    "padic_bound_bu",
    "padic_form",
]
