"""Certified effective irrationality measures for real and p-adic n-th
roots of rationals close to 1, with Thue-Mahler desk-scale verification."""

__version__ = "0.1.0"

from .intervals import BoundedReal, ln_interval  # noqa: F401
from .eta import EtaValue, eta_bm, eta_padic, eta_real  # noqa: F401
from .padic import PAdicApprox, Valuation, hensel_nth_root, vp_int, vp_power_pair, vp_rat  # noqa: F401
from .measures import (  # noqa: F401
    BoundReport,
    best_bound,
    bound_53,
    bound_61,
    bound_bm,
    bound_thm21,
    bound_thm31,
    check_cor22,
    degree_check,
    liouville,
)
from .linforms import (  # noqa: F401
    arch_E,
    arch_bound_51,
    arch_bound_52,
    arch_form,
    mult_independent,
    padic_bound_bu,
    padic_form,
)
from .verify import cf_expand, measure_exponents_padic, measure_exponents_real, real_root  # noqa: F401
from .thue_mahler import TMInstance, TMSolution, check_thm41, eq71_decompose, strip_primes, tm_search  # noqa: F401
