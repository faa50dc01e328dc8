"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called on an input outside its stated domain."""


class UnsupportedGraphError(ValueError):
    """The input is valid but no constructive method covers it."""


class NoMethodApplies(UnsupportedGraphError):
    """The automatic dispatcher exhausted every method including exact search.

    Carries any obstruction certificates discovered and the per-modulus
    solver outcomes from the fallback sweep.
    """

    def __init__(self, message, obstructions=(), outcomes=None):
        super().__init__(message)
        self.obstructions = tuple(obstructions)
        self.outcomes = dict(outcomes or {})


class NotOuterplanarError(ValueError):
    """A block failed outerplanarity recognition."""


class InternalDefectError(RuntimeError):
    """A construction violated an invariant its proof guarantees.

    Raised instead of silently returning a bad coloring; if one of these
    fires it is a bug in the construction, not a property of the input.
    """
