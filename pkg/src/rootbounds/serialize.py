"""Machine-readable output schemas.

Every numeric field is either an exact integer, an exact rational as a
string "num/den", or a dyadic interval endpoint pair
[mantissa-string, exponent] with value mantissa * 2**exponent.  Binary
floating point never appears in serialized output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from . import __version__
from .intervals import BoundedReal
from .measures import BoundReport, Condition
from .thue_mahler import Eq71Record, TMSolution
from .verify import CFExpansion, ExponentSample


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def interval_json(iv: Optional[BoundedReal]) -> Optional[dict[str, Any]]:
    if iv is None:
        return None
    (mlo, elo), (mhi, ehi) = iv.endpoints_mantissa_exp()
    return {"lo": [str(mlo), elo], "hi": [str(mhi), ehi]}


def conditions_json(conds) -> list[dict[str, Any]]:
    return [
        {"name": c.name, "passed": c.passed, "detail": c.detail, "required": c.required}
        for c in conds
    ]


def report_json(r: BoundReport, prec: int, ledger: bool = False) -> dict[str, Any]:
    out: dict[str, Any] = {
        "theorem": r.theorem,
        "applicable": r.applicable,
        "failed_conditions": r.failed_conditions,
        "eta": None,
        "bound": interval_json(r.bound),
        "liouville": r.liouville,
        "best": interval_json(r.best),
        "version": __version__,
        "precision": prec,
    }
    if r.eta is not None:
        out["eta"] = interval_json(r.eta.value)
        out["eta"]["exact"] = None if r.eta.exact is None else frac_str(r.eta.exact)
    if r.notes:
        out["notes"] = list(r.notes)
    if ledger:
        out["conditions"] = conditions_json(r.conditions)
        if r.candidates:
            out["candidates"] = [report_json(c, prec, ledger=True) for c in r.candidates]
    return out


def solution_json(s: TMSolution) -> dict[str, Any]:
    return {"x": s.x, "y": s.y, "z": list(s.z)}


def sample_json(s: ExponentSample) -> dict[str, Any]:
    return {"x": s.x, "y": s.y, "exponent": interval_json(s.exponent)}


def cf_json(cf: CFExpansion) -> dict[str, Any]:
    return {
        "quotients": cf.quotients,
        "convergents": [[p, q] for p, q in cf.convergents],
        "certified_count": cf.certified_count,
    }


def eq71_json(rec: Eq71Record) -> dict[str, Any]:
    return {
        "x": rec.x,
        "y": rec.y,
        "N": rec.N,
        "arch_factor": frac_str(rec.arch_factor),
        "padic_factors": [frac_str(f) for f in rec.padic_factors],
        "residual": rec.residual,
        "z": list(rec.z),
        "product": frac_str(rec.product),
    }


def dumps(obj: dict[str, Any]) -> str:
    """Deterministic single-line JSON."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
