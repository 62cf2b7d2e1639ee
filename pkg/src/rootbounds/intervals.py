"""Directed-rounded dyadic interval arithmetic.

Every transcendental quantity in the toolkit is carried as a
``BoundedReal``: a closed interval with dyadic endpoints (an MPFR binary
float *is* an integer mantissa times a power of two), rounded outward at
every step, so the exact value is always contained in ``[lo, hi]``.

MPFR guarantees correct rounding for all operations used here, including
``log``, so directed rounding of each endpoint gives certified enclosures.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Callable, Optional, Union

import gmpy2
from gmpy2 import mpfr, mpq, mpz

from .errors import PrecisionCapError

DEFAULT_PREC = 128
MIN_PREC = 32
MAX_PREC = 4096

# guard bits so that the two-step convert-then-log pattern still meets the
# advertised width contract at the nominal precision
_GUARD = 8

Rat = Union[int, Fraction]


@functools.lru_cache(maxsize=None)
def _dn(prec: int):
    return gmpy2.context(precision=prec, round=gmpy2.RoundDown)


@functools.lru_cache(maxsize=None)
def _up(prec: int):
    return gmpy2.context(precision=prec, round=gmpy2.RoundUp)


def _to_mpq(x: Rat) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def to_fraction(x: mpfr) -> Fraction:
    """Exact rational value of a (finite) mpfr."""
    if x == 0:
        return Fraction(0)
    m, e = x.as_mantissa_exp()
    e = int(e)
    if e >= 0:
        return Fraction(int(m) << e)
    return Fraction(int(m), 1 << (-e))


def mantissa_exp(x: mpfr) -> tuple[int, int]:
    if x == 0:
        return (0, 0)
    m, e = x.as_mantissa_exp()
    return (int(m), int(e))


class BoundedReal:
    """Certified enclosure of a real number with dyadic endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: mpfr, hi: mpfr):
        if gmpy2.is_nan(lo) or gmpy2.is_nan(hi):
            raise ValueError("NaN endpoint")
        if lo > hi:
            raise ValueError(f"inverted interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_rat(cls, x: Rat, prec: int = DEFAULT_PREC) -> "BoundedReal":
        q = _to_mpq(x)
        return cls(mpfr(q, prec, _dn(prec)), mpfr(q, prec, _up(prec)))

    @classmethod
    def exact(cls, x: int) -> "BoundedReal":
        v = mpfr(x, max(MIN_PREC, x.bit_length() + 1))
        assert v == x
        return cls(v, v)

    @classmethod
    def zero(cls) -> "BoundedReal":
        z = mpfr(0)
        return cls(z, z)

    # -- queries --------------------------------------------------------

    def width(self) -> Fraction:
        return to_fraction(self.hi) - to_fraction(self.lo)

    def contains(self, x: Rat) -> bool:
        q = _to_mpq(x)
        return self.lo <= q <= self.hi

    def is_subset(self, other: "BoundedReal") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def is_point(self) -> bool:
        return self.lo == self.hi

    def lo_fraction(self) -> Fraction:
        return to_fraction(self.lo)

    def hi_fraction(self) -> Fraction:
        return to_fraction(self.hi)

    def endpoints_mantissa_exp(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (mantissa_exp(self.lo), mantissa_exp(self.hi))

    # -- ternary comparisons against exact rationals or intervals -------

    def cmp_gt(self, other: Union[Rat, "BoundedReal"]) -> Optional[bool]:
        """True if certainly >, False if certainly not >, None if undecided."""
        olo, ohi = _other_bounds(other)
        if self.lo > ohi:
            return True
        if self.hi <= olo:
            return False
        return None

    def cmp_ge(self, other: Union[Rat, "BoundedReal"]) -> Optional[bool]:
        olo, ohi = _other_bounds(other)
        if self.lo >= ohi:
            return True
        if self.hi < olo:
            return False
        return None

    def cmp_lt(self, other: Union[Rat, "BoundedReal"]) -> Optional[bool]:
        g = self.cmp_ge(other)
        return None if g is None else not g

    def cmp_le(self, other: Union[Rat, "BoundedReal"]) -> Optional[bool]:
        g = self.cmp_gt(other)
        return None if g is None else not g

    # -- arithmetic (outward rounded) -----------------------------------

    def __neg__(self) -> "BoundedReal":
        return BoundedReal(_neg_exact(self.hi), _neg_exact(self.lo))

    def add(self, other: Union[Rat, "BoundedReal"], prec: int = DEFAULT_PREC) -> "BoundedReal":
        o = _coerce(other, prec)
        return BoundedReal(_dn(prec).add(self.lo, o.lo), _up(prec).add(self.hi, o.hi))

    def sub(self, other: Union[Rat, "BoundedReal"], prec: int = DEFAULT_PREC) -> "BoundedReal":
        o = _coerce(other, prec)
        return BoundedReal(_dn(prec).sub(self.lo, o.hi), _up(prec).sub(self.hi, o.lo))

    def mul(self, other: Union[Rat, "BoundedReal"], prec: int = DEFAULT_PREC) -> "BoundedReal":
        o = _coerce(other, prec)
        d, u = _dn(prec), _up(prec)
        pairs = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)]
        lo = min(d.mul(a, b) for a, b in pairs)
        hi = max(u.mul(a, b) for a, b in pairs)
        return BoundedReal(lo, hi)

    def div(self, other: Union[Rat, "BoundedReal"], prec: int = DEFAULT_PREC) -> "BoundedReal":
        o = _coerce(other, prec)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("divisor interval contains zero")
        d, u = _dn(prec), _up(prec)
        pairs = [(self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi)]
        lo = min(d.div(a, b) for a, b in pairs)
        hi = max(u.div(a, b) for a, b in pairs)
        return BoundedReal(lo, hi)

    def abs(self) -> "BoundedReal":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return BoundedReal(mpfr(0), max(_neg_exact(self.lo), self.hi))

    def log(self, prec: int = DEFAULT_PREC) -> "BoundedReal":
        if self.lo <= 0:
            raise ValueError("log of interval touching (-inf, 0]")
        return BoundedReal(_dn(prec).log(self.lo), _up(prec).log(self.hi))

    def rootn(self, n: int, prec: int = DEFAULT_PREC) -> "BoundedReal":
        if self.lo < 0:
            raise ValueError("rootn of negative interval")
        return BoundedReal(_dn(prec).rootn(self.lo, n), _up(prec).rootn(self.hi, n))

    def pow_int(self, k: int, prec: int = DEFAULT_PREC) -> "BoundedReal":
        """x**k for k >= 1 on a nonnegative interval (monotone case)."""
        if k < 1:
            raise ValueError("exponent must be >= 1")
        if self.lo < 0:
            raise ValueError("pow_int on negative interval")
        d, u = _dn(prec), _up(prec)
        return BoundedReal(d.pow(self.lo, k), u.pow(self.hi, k))

    def min_with(self, other: Union[Rat, "BoundedReal"], prec: int = DEFAULT_PREC) -> "BoundedReal":
        o = _coerce(other, prec)
        return BoundedReal(min(self.lo, o.lo), min(self.hi, o.hi))

    def max_with(self, other: Union[Rat, "BoundedReal"], prec: int = DEFAULT_PREC) -> "BoundedReal":
        o = _coerce(other, prec)
        return BoundedReal(max(self.lo, o.lo), max(self.hi, o.hi))

    # operators use DEFAULT_PREC; bound evaluators thread prec explicitly
    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __truediv__ = div

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BoundedReal)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self):
        return hash((to_fraction(self.lo), to_fraction(self.hi)))

    def __repr__(self) -> str:
        return f"BoundedReal[{self.lo}, {self.hi}]"


def _neg_exact(x: mpfr) -> mpfr:
    # the bare - operator would round through the ambient 53-bit context;
    # negation at the operand's own precision is always exact
    return gmpy2.context(precision=max(x.precision, MIN_PREC)).minus(x)


def _other_bounds(other: Union[Rat, BoundedReal]) -> tuple:
    if isinstance(other, BoundedReal):
        return other.lo, other.hi
    q = _to_mpq(other)
    return q, q


def _coerce(x: Union[Rat, BoundedReal], prec: int) -> BoundedReal:
    if isinstance(x, BoundedReal):
        return x
    return BoundedReal.from_rat(x, prec)


def ln_interval(x: Rat, prec: int = DEFAULT_PREC) -> BoundedReal:
    """Certified enclosure of ln x for an exact positive rational x.

    Width is at most ``2**(-prec+2) * max(1, |ln x|)`` for prec >= 32.
    """
    if prec < MIN_PREC:
        raise ValueError(f"prec must be >= {MIN_PREC}")
    q = _to_mpq(x)
    if q <= 0:
        raise ValueError("ln of non-positive rational")
    if q == 1:
        return BoundedReal.zero()
    w = prec + _GUARD
    # ln is increasing, so rounding the argument in the same direction as
    # the result keeps the enclosure valid
    lo = _dn(w).log(mpfr(q, w, _dn(w)))
    hi = _up(w).log(mpfr(q, w, _up(w)))
    return BoundedReal(lo, hi)


def e_interval(prec: int = DEFAULT_PREC) -> BoundedReal:
    one = mpfr(1, prec)
    return BoundedReal(_dn(prec).exp(one), _up(prec).exp(one))


def decide(
    predicate: Callable[[int], Optional[bool]],
    start_prec: int = DEFAULT_PREC,
    cap: int = MAX_PREC,
    what: str = "comparison",
) -> bool:
    """Evaluate a ternary predicate at doubling precision until it resolves."""
    prec = start_prec
    while prec <= cap:
        r = predicate(prec)
        if r is not None:
            return r
        prec *= 2
    raise PrecisionCapError(what, cap)
