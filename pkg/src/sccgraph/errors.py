"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed group spec, bad file, or invalid argument."""


class BudgetExceeded(RuntimeError):
    """A size or search budget was exhausted.

    ``lower`` and ``upper`` carry the best bounds known when the search stopped,
    when that makes sense for the computation.
    """

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
