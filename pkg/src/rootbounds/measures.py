"""Effective irrationality-measure bound reports.

Each evaluator applies one theorem-shaped bound to a concrete (a, b, n)
or (a, b, p, n), checks every hypothesis (in exact integer arithmetic
whenever the hypothesis has an exact integer form), and returns a
``BoundReport`` carrying the full condition ledger, the eta parameter,
the certified bound interval (its hi endpoint is the reported value),
the Liouville baseline n, and the best of the two.

The ineffective constants C(xi, eps) of the measure definition are never
computed; reports state exponent bounds only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import gmpy2

from .errors import InapplicableError
from .eta import EtaValue, eta_bm, eta_padic, eta_real
from .factor import factorize
from .intervals import DEFAULT_PREC, BoundedReal, decide, ln_interval
from .padic import is_prime, vp_int

# exact forms of the printed numerical constants
C_21 = Fraction(351, 10)  # 35.1
C_31 = Fraction(269, 5)  # 53.8
C_53 = 21180
C_61 = 861

REAL_THEOREMS = ("BM", "T2.1", "C2.2", "Eq5.3")
PADIC_THEOREMS = ("T3.1", "Eq6.1")

# bounds whose constants are only "absolute, effectively computable":
# surfaced as informational rows, never with a numeric value
NONCOMPUTABLE_NOTES = (
    "Eq1.2: constant unspecified in source (C(xi) log n)",
    "Eq1.3: constant unspecified in source (C log a log n)",
    "Eq3.1: constant unspecified in source (C p log a log n)",
)


@dataclass(frozen=True)
class Condition:
    name: str
    passed: Optional[bool]  # None = not checkable
    detail: str = ""
    required: bool = True


@dataclass(frozen=True)
class BoundReport:
    theorem: str
    applicable: bool
    conditions: tuple[Condition, ...]
    eta: Optional[EtaValue]
    bound: Optional[BoundedReal]
    liouville: int
    best: Optional[BoundedReal]
    notes: tuple[str, ...] = ()
    candidates: tuple["BoundReport", ...] = field(default=(), compare=False)

    @property
    def failed_conditions(self) -> list[str]:
        return [c.name for c in self.conditions if c.required and c.passed is False]


def _report(
    theorem: str,
    conds: list[Condition],
    eta: Optional[EtaValue],
    bound: Optional[BoundedReal],
    n: int,
    prec: int,
    notes: tuple[str, ...] = (),
) -> BoundReport:
    failed = [c for c in conds if c.required and c.passed is False]
    applicable = not failed and bound is not None
    best = bound.min_with(BoundedReal.exact(n), prec) if applicable else None
    return BoundReport(
        theorem, applicable, tuple(conds), eta,
        bound if applicable else None, n, best, notes,
    )


def degree_check(a: int, b: int, n: int) -> bool:
    """True iff X**n - a/b is irreducible over Q.

    For a positive rational this reduces to: a/b is not an l-th power
    for any prime l dividing n (the -4*t**4 branch of the classical
    criterion cannot occur for positive values).
    """
    if a < 1 or b < 1 or n < 1:
        raise ValueError("need positive a, b, n")
    if n == 1:
        return True
    q = Fraction(a, b)
    for ell in factorize(n):
        _, num_ok = gmpy2.iroot(q.numerator, ell)
        _, den_ok = gmpy2.iroot(q.denominator, ell)
        if num_ok and den_ok:
            return False
    return True


def liouville(n: int, prec: int = DEFAULT_PREC) -> BoundReport:
    """The baseline: a degree-n algebraic number has measure at most n."""
    if n < 2:
        raise ValueError("need n >= 2")
    bound = BoundedReal.exact(n)
    return _report("Liouville", [Condition("degree-n root", True)], None, bound, n, prec)


def bound_bm(a: int, b: int, n: int, prec: int = DEFAULT_PREC) -> BoundReport:
    """Cube-root shape: 2/eta + 6*(n**5 log n / log b)**(1/3)."""
    conds = [
        Condition("a>=1", a >= 1),
        Condition("b>=2", b >= 2),
        Condition("n>=3", n >= 3),
        Condition("a!=b", a != b),
    ]
    if any(c.passed is False for c in conds):
        return _report("BM", conds, None, None, n, prec)
    deg = degree_check(a, b, n)
    conds.append(Condition("degree", deg, "X^n - a/b irreducible"))
    eta = eta_bm(a, b, prec)
    if eta.exact is not None:
        n_eta_ok = n * eta.exact > 2
    else:
        n_eta_ok = decide(
            lambda pr: eta_bm(a, b, pr).value.mul(n, pr).cmp_gt(2),
            prec, what="n > 2/eta",
        )
    conds.append(Condition("n>2/eta", n_eta_ok))
    # informational: the window in which this shape beats the 35.1 shape
    big_b = decide(
        lambda pr: ln_interval(b, pr).cmp_gt(
            ln_interval(n, pr).mul(216 * n * n, pr)
        ),
        prec, what="b > n^(216 n^2)",
    )
    conds.append(Condition("b>n^(216n^2)", big_b, "informational", required=False))
    if any(c.required and c.passed is False for c in conds):
        return _report("BM", conds, eta, None, n, prec)
    cube = (
        ln_interval(n, prec)
        .mul(n**5, prec)
        .div(ln_interval(b, prec), prec)
        .rootn(3, prec)
        .mul(6, prec)
    )
    bound = BoundedReal.exact(2).div(eta.value, prec).add(cube, prec)
    return _report("BM", conds, eta, bound, n, prec)


def _thm21_conditions(a: int, b: int, n: int) -> list[Condition]:
    return [
        Condition("n>=3", n >= 3),
        Condition("b>16", b > 16),
        Condition("a>b", a > b),
        Condition("a<6b/5", 5 * a < 6 * b),
    ]


def bound_thm21(a: int, b: int, n: int, prec: int = DEFAULT_PREC) -> BoundReport:
    """35.1/eta * max{log 2n / (eta log a), 10}**2 in the size window."""
    conds = _thm21_conditions(a, b, n)
    if any(c.passed is False for c in conds):
        return _report("T2.1", conds, None, None, n, prec)
    eta = eta_real(a, b, prec)
    # the max branch has an exact integer form: log 2n <= 10 eta log a
    # is 2n <= (a/(a-b))**10
    low_branch = 2 * n * (a - b) ** 10 <= a**10
    notes = (f"max-branch={'10' if low_branch else 'log'}",)
    if low_branch:
        if eta.exact is not None:
            bound = BoundedReal.from_rat(C_21 * 100 / eta.exact, prec)
        else:
            bound = BoundedReal.from_rat(C_21 * 100, prec).div(eta.value, prec)
    else:
        ratio = ln_interval(2 * n, prec).div(
            ln_interval(eta.exact_arg, prec), prec
        ).max_with(10, prec)
        bound = (
            ratio.pow_int(2, prec)
            .mul(C_21, prec)
            .div(eta.value, prec)
        )
    return _report("T2.1", conds, eta, bound, n, prec, notes)


def check_cor22(a: int, b: int, n: int, prec: int = DEFAULT_PREC) -> BoundReport:
    """The eta >= 1/2 specialization: flat bound 7020 in its window."""
    conds = [
        Condition("n>=3", n >= 3),
        Condition("b>30", b > 30),
        Condition("a>b", a > b),
        Condition("a<b+sqrt(a)", a > b and (a - b) ** 2 < a),
        Condition("(2.3) a^5>=2n", a**5 >= 2 * n),
    ]
    if any(c.passed is False for c in conds):
        return _report("C2.2", conds, None, None, n, prec)
    inner = bound_thm21(a, b, n, prec)
    # the corollary window implies the theorem window and eta > 1/2
    assert inner.applicable, "corollary window must imply the theorem window"
    assert inner.bound is not None and inner.bound.cmp_le(7020) is True
    bound = BoundedReal.exact(7020)
    return _report("C2.2", conds, inner.eta, bound, n, prec)


def bound_53(a: int, b: int, n: int, prec: int = DEFAULT_PREC) -> BoundReport:
    """21180/eta * max{log(2n/log a)/(eta log a) + 1, 372}: linear in log n."""
    conds = _thm21_conditions(a, b, n)
    if any(c.passed is False for c in conds):
        return _report("Eq5.3", conds, None, None, n, prec)
    eta = eta_real(a, b, prec)
    log_a = ln_interval(a, prec)
    # eta * log a = log(a/(a-b)) exactly
    eta_log_a = ln_interval(eta.exact_arg, prec)
    x = (
        BoundedReal.exact(2 * n)
        .div(log_a, prec)
        .log(prec)
        .div(eta_log_a, prec)
        .add(1, prec)
    )
    branch = "log" if x.cmp_gt(372) else ("372" if x.cmp_lt(372) else "boundary")
    bound = x.max_with(372, prec).mul(C_53, prec).div(eta.value, prec)
    t21 = bound_thm21(a, b, n, prec)
    cmp_note = "n/a"
    if t21.applicable and t21.bound is not None:
        cmp_note = (
            "Eq5.3" if bound.hi < t21.bound.hi
            else "T2.1" if t21.bound.hi < bound.hi
            else "tie"
        )
    notes = (f"max-branch={branch}", f"smaller-of-2.1/5.3={cmp_note}")
    return _report("Eq5.3", conds, eta, bound, n, prec, notes)


def _thm31_conditions(a: int, b: int, p: int, n: int) -> tuple[list[Condition], Optional[int]]:
    conds = [
        Condition("p-prime", is_prime(p)),
        Condition("1<=b<a", 1 <= b < a),
        Condition("n>=3", n >= 3),
    ]
    if any(c.passed is False for c in conds):
        return conds, None
    conds.append(Condition("p|a-b", (a - b) % p == 0))
    conds.append(Condition("p∤ab", a % p != 0 and b % p != 0))
    conds.append(Condition("p∤n", n % p != 0))
    if any(c.passed is False for c in conds):
        return conds, None
    E = vp_int(a - b, p).v
    conds.append(Condition("a^eta>=4", p**E >= 4, f"p^E = {p}^{E}"))
    return conds, E


def bound_thm31(a: int, b: int, p: int, n: int, prec: int = DEFAULT_PREC) -> BoundReport:
    """53.8/eta * max{log 2n / (eta log a), 4}**2 for the Hensel root."""
    conds, E = _thm31_conditions(a, b, p, n)
    if E is None or any(c.required and c.passed is False for c in conds):
        return _report("T3.1", conds, None, None, n, prec)
    eta = eta_padic(a, p, E, prec)
    # max branch exact form: log 2n <= 4 E log p is 2n <= p**(4E)
    low_branch = 2 * n <= p ** (4 * E)
    notes = (f"max-branch={'4' if low_branch else 'log'}",)
    if low_branch:
        if eta.exact is not None:
            bound = BoundedReal.from_rat(C_31 * 16 / eta.exact, prec)
        else:
            bound = BoundedReal.from_rat(C_31 * 16, prec).div(eta.value, prec)
    else:
        # eta log a = E log p exactly
        ratio = ln_interval(2 * n, prec).div(
            ln_interval(p, prec).mul(E, prec), prec
        ).max_with(4, prec)
        bound = ratio.pow_int(2, prec).mul(C_31, prec).div(eta.value, prec)
    return _report("T3.1", conds, eta, bound, n, prec, notes)


def bound_61(a: int, b: int, p: int, n: int, prec: int = DEFAULT_PREC) -> BoundReport:
    """Flat 861/eta, valid once a**(4 eta) >= 2n, i.e. p**(4E) >= 2n."""
    conds, E = _thm31_conditions(a, b, p, n)
    if E is None or any(c.required and c.passed is False for c in conds):
        return _report("Eq6.1", conds, None, None, n, prec)
    conds.append(Condition("a^(4eta)>=2n", p ** (4 * E) >= 2 * n, f"p^4E = {p}^{4 * E}"))
    if any(c.required and c.passed is False for c in conds):
        return _report("Eq6.1", conds, None, None, n, prec)
    eta = eta_padic(a, p, E, prec)
    if eta.exact is not None:
        bound = BoundedReal.from_rat(Fraction(C_61) / eta.exact, prec)
    else:
        bound = BoundedReal.exact(C_61).div(eta.value, prec)
    return _report("Eq6.1", conds, eta, bound, n, prec)


def best_bound(
    a: int,
    b: int,
    n: int,
    p: Optional[int] = None,
    prec: int = DEFAULT_PREC,
) -> BoundReport:
    """Best certified exponent over all applicable theorems plus Liouville.

    Ties are broken toward Liouville (the exact integer).
    """
    deg = degree_check(a, b, n)
    deg_cond = Condition("degree", deg, "X^n - a/b irreducible")
    if not deg:
        return BoundReport(
            "best", False, (deg_cond,), None, None, n, None, NONCOMPUTABLE_NOTES
        )
    candidates: list[BoundReport] = [liouville(n, prec)]
    if p is None:
        candidates.append(bound_bm(a, b, n, prec))
        candidates.append(bound_thm21(a, b, n, prec))
        candidates.append(check_cor22(a, b, n, prec))
        candidates.append(bound_53(a, b, n, prec))
    else:
        candidates.append(bound_thm31(a, b, p, n, prec))
        candidates.append(bound_61(a, b, p, n, prec))
    best_iv = BoundedReal.exact(n)
    winner = candidates[0]  # Liouville
    for r in candidates[1:]:
        if r.applicable and r.bound is not None:
            best_iv = best_iv.min_with(r.bound, prec)
            if r.bound.hi < winner.bound.hi:
                winner = r
    return BoundReport(
        winner.theorem,
        True,
        (deg_cond,) + winner.conditions,
        winner.eta,
        winner.bound,
        n,
        best_iv,
        NONCOMPUTABLE_NOTES,
        tuple(candidates),
    )
