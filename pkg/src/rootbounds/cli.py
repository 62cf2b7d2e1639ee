"""Batch-oriented command-line front end.

One result object per input (inline flags or one JSON object per input
line), emitted as deterministic JSON lines in input order regardless of
the parallelism degree.

Exit codes: 0 success, 1 usage/parse error, 2 some hypothesis was
inapplicable (reports are still emitted), 3 a decision stayed
indeterminate at the precision cap or work budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Optional

from . import __version__, serialize
from .errors import InapplicableError, IndeterminateError, RootboundsError
from .intervals import MAX_PREC
from .linforms import arch_E, arch_bound_51, arch_bound_52, arch_form, padic_bound_bu, padic_form
from .measures import best_bound
from .padic import hensel_nth_root
from .thue_mahler import TMInstance, check_thm41, tm_search
from .verify import cf_expand, measure_exponents_padic, measure_exponents_real

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INAPPLICABLE = 2
EXIT_INDETERMINATE = 3

ENV_PREC = "ROOTBOUNDS_PREC"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _handle_measure_real(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    r = best_bound(int(p["a"]), int(p["b"]), int(p["n"]), None, prec)
    out = serialize.report_json(r, prec, ledger)
    status = EXIT_OK
    if not r.applicable or all(
        not c.applicable for c in r.candidates if c.theorem != "Liouville"
    ):
        status = EXIT_INAPPLICABLE
        if not ledger:
            out["candidates"] = [
                serialize.report_json(c, prec) for c in r.candidates
            ]
    return out, status


def _handle_measure_padic(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    r = best_bound(int(p["a"]), int(p["b"]), int(p["n"]), int(p["p"]), prec)
    out = serialize.report_json(r, prec, ledger)
    status = EXIT_OK
    if not r.applicable or all(
        not c.applicable for c in r.candidates if c.theorem != "Liouville"
    ):
        status = EXIT_INAPPLICABLE
    return out, status


def _handle_hensel(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    r = hensel_nth_root(int(p["a"]), int(p["b"]), int(p["p"]), int(p["n"]), int(p["k"]))
    return {"p": r.p, "k": r.k, "r": r.r, "version": __version__}, EXIT_OK


def _handle_linform_arch(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    f = arch_form(
        int(p["a1"]), int(p["a2"]), int(p["b1"]), int(p["b2"]),
        int(p["u"]), int(p["v"]), prec=prec,
    )
    out = {
        "E": serialize.interval_json(arch_E(f, prec)),
        "bound51": serialize.interval_json(arch_bound_51(f, prec)),
        "bound52": serialize.interval_json(arch_bound_52(f, prec)),
        "version": __version__,
        "precision": prec,
    }
    return out, EXIT_OK


def _handle_linform_padic(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    f = padic_form(
        int(p["x1"]), int(p["y1"]), int(p["x2"]), int(p["y2"]),
        int(p["b"]), int(p["p"]),
        E=int(p["E"]) if p.get("E") is not None else None,
        prec=prec,
    )
    out = {
        "bound": serialize.interval_json(padic_bound_bu(f, prec)),
        "version": __version__,
        "precision": prec,
    }
    return out, EXIT_OK


def _handle_cf_verify(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    a, b, n, K = int(p["a"]), int(p["b"]), int(p["n"]), int(p["K"])
    cf = cf_expand(a, b, n, K, prec)
    samples = measure_exponents_real(a, b, n, K, prec)
    out = serialize.cf_json(cf)
    out["samples"] = [serialize.sample_json(s) for s in samples]
    out["version"] = __version__
    return out, EXIT_OK


def _handle_padic_verify(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    samples = measure_exponents_padic(
        int(p["a"]), int(p["b"]), int(p["p"]), int(p["n"]), int(p["H"]), prec
    )
    return {
        "samples": [serialize.sample_json(s) for s in samples],
        "version": __version__,
    }, EXIT_OK


def _instance_from(p: dict) -> TMInstance:
    primes = p["primes"]
    if isinstance(primes, str):
        primes = [int(t) for t in primes.split(",")]
    return TMInstance(
        b=int(p["b"]),
        c=int(p["c"]),
        d=int(p["d"]),
        n=int(p["n"]),
        primes=tuple(primes),
        eta=Fraction(p["eta"]),
        x_cap=int(p.get("x_cap", 100)),
        z_cap=int(p["z_cap"]) if p.get("z_cap") is not None else None,
    )


def _handle_tm_check(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    conds = check_thm41(_instance_from(p))
    failed = [c.name for c in conds if c.required and c.passed is False]
    out = {
        "conditions": serialize.conditions_json(conds),
        "failed_conditions": failed,
        "version": __version__,
    }
    return out, EXIT_INAPPLICABLE if failed else EXIT_OK


def _handle_tm_search(p: dict, prec: int, ledger: bool) -> tuple[dict, int]:
    inst = _instance_from(p)
    res = tm_search(inst)
    out = {
        "solutions": [serialize.solution_json(s) for s in res.solutions],
        "degenerate": [serialize.solution_json(s) for s in res.degenerate],
        "version": __version__,
    }
    if ledger:
        out["conditions"] = serialize.conditions_json(check_thm41(inst))
    return out, EXIT_OK


_HANDLERS = {
    "measure-real": _handle_measure_real,
    "measure-padic": _handle_measure_padic,
    "hensel": _handle_hensel,
    "linform-arch": _handle_linform_arch,
    "linform-padic": _handle_linform_padic,
    "cf-verify": _handle_cf_verify,
    "padic-verify": _handle_padic_verify,
    "tm-check": _handle_tm_check,
    "tm-search": _handle_tm_search,
}

_INLINE_ARGS = {
    "measure-real": ["a", "b", "n"],
    "measure-padic": ["a", "b", "p", "n"],
    "hensel": ["a", "b", "p", "n", "k"],
    "linform-arch": ["a1", "a2", "b1", "b2", "u", "v"],
    "linform-padic": ["x1", "y1", "x2", "y2", "b", "p"],
    "cf-verify": ["a", "b", "n", "K"],
    "padic-verify": ["a", "b", "p", "n", "H"],
    "tm-check": ["b", "c", "d", "n"],
    "tm-search": ["b", "c", "d", "n"],
}


def run_line(task: tuple[str, dict, int, bool]) -> tuple[dict, int]:
    """Process one input object; must stay a module-level function so the
    process pool can pickle it."""
    sub, params, prec, ledger = task
    try:
        return _HANDLERS[sub](params, prec, ledger)
    except InapplicableError as e:
        return {"error": "inapplicable", "condition": e.condition, "detail": e.detail}, EXIT_INAPPLICABLE
    except IndeterminateError as e:
        return {"error": "indeterminate", "detail": str(e)}, EXIT_INDETERMINATE


def _render_table(out: dict) -> str:
    lines = [f"{k}: {json.dumps(out[k], sort_keys=True)}" for k in sorted(out)]
    return "\n".join(lines) + "\n---"


def build_parser() -> _Parser:
    # shared flags are accepted both before and after the subcommand;
    # SUPPRESS keeps absent flags out of the namespace so the subparser
    # pass never clobbers a value parsed before the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision", type=int, default=argparse.SUPPRESS,
        help="working precision in bits (64..4096)",
    )
    common.add_argument("--format", choices=["json-lines", "table"],
                        default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="parallelism degree")
    common.add_argument("--ledger", action="store_const", const=True,
                        default=argparse.SUPPRESS,
                        help="include the full hypothesis table in output")
    parser = _Parser(prog="rootbounds", description=__doc__, parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="subcommand", required=True)
    for name, args in _INLINE_ARGS.items():
        sp = subs.add_parser(name, parents=[common])
        sp.add_argument("--input", help="JSON-lines file, one instance per line")
        for a in args:
            sp.add_argument(f"--{a}", type=int)
        if name in ("tm-check", "tm-search"):
            sp.add_argument("--primes", help="comma-separated primes")
            sp.add_argument("--eta", help="rational like 3/10")
            sp.add_argument("--x-cap", dest="x_cap", type=int)
            sp.add_argument("--z-cap", dest="z_cap", type=int)
        if name == "linform-padic":
            sp.add_argument("--E", type=int)
    return parser


def _gather_tasks(ns) -> list[dict]:
    if ns.input:
        for a in _INLINE_ARGS[ns.subcommand]:
            if getattr(ns, a, None) is not None:
                raise ValueError("--input excludes inline parameters")
        with open(ns.input) as fh:
            return [json.loads(line) for line in fh if line.strip()]
    params = {}
    for a in _INLINE_ARGS[ns.subcommand]:
        v = getattr(ns, a, None)
        if v is None:
            raise ValueError(f"missing --{a} (or use --input)")
        params[a] = v
    for extra in ("primes", "eta", "x_cap", "z_cap", "E"):
        v = getattr(ns, extra, None)
        if v is not None:
            params[extra] = v
    if ns.subcommand in ("tm-check", "tm-search"):
        if "primes" not in params or "eta" not in params:
            raise ValueError("missing --primes/--eta (or use --input)")
    return [params]


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    ns.precision = getattr(ns, "precision", None) or int(os.environ.get(ENV_PREC, "128"))
    ns.format = getattr(ns, "format", None) or "json-lines"
    ns.jobs = getattr(ns, "jobs", None) or 1
    ns.ledger = bool(getattr(ns, "ledger", False))
    if not 64 <= ns.precision <= MAX_PREC:
        parser.error(f"precision must be in [64, {MAX_PREC}]")
    try:
        tasks = _gather_tasks(ns)
    except (ValueError, OSError, json.JSONDecodeError) as e:
        print(f"rootbounds: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    work = [(ns.subcommand, t, ns.precision, ns.ledger) for t in tasks]
    try:
        if ns.jobs > 1 and len(work) > 1:
            with ProcessPoolExecutor(max_workers=ns.jobs) as pool:
                results = list(pool.map(run_line, work))
        else:
            results = [run_line(w) for w in work]
    except (RootboundsError, ValueError, OverflowError) as e:
        print(f"rootbounds: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    for out, st in results:
        if ns.format == "json-lines":
            print(serialize.dumps(out))
        else:
            print(_render_table(out))
        if st != EXIT_OK:
            print(
                serialize.dumps({"status": st, "detail": out.get("error", "inapplicable-hypotheses")}),
                file=sys.stderr,
            )
        status = max(status, st)
    return status


if __name__ == "__main__":
    sys.exit(main())
