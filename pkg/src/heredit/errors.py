"""Exception types shared across the package."""


class HereditError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(HereditError):
    """Invalid argument: bad family order, malformed rational, size cap hit."""


class FormatError(HereditError):
    """Malformed serialized value (graph6 string, CRG text, family spec)."""


class RangeError(ValidationError):
    """A requested evaluation point lies outside a curve's stated interval."""


class BudgetError(HereditError):
    """A configurable search budget ran out before the search finished.

    ``best_bound`` carries the best upper bound found so far when the
    interrupted search had one (edit-distance deepening), else ``None``.
    """

    def __init__(self, message: str, best_bound=None):
        super().__init__(message)
        self.best_bound = best_bound
