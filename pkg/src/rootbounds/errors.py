"""Exception types shared across the toolkit."""


class RootboundsError(Exception):
    """Base class for all toolkit errors."""


class InapplicableError(RootboundsError):
    """A theorem hypothesis failed; carries the name of the failed condition."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        self.detail = detail
        msg = f"inapplicable({condition})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class IndeterminateError(RootboundsError):
    """A decision could not be made within the allotted budget.

    Raised instead of silently guessing, e.g. when a factorization budget
    is exhausted during a multiplicative-independence check.
    """


class PrecisionCapError(IndeterminateError):
    """A comparison stayed undecided at the hard precision cap."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"undecidable at cap: {what} (cap {cap} bits)")
