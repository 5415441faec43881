"""Exception hierarchy shared by all modules."""


class NCTopError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(NCTopError, ValueError):
    pass


class NotInvariant(NCTopError):
    """The image of the source subspace escapes the target subspace."""


class CycleError(NCTopError):
    pass


class UnsupportedShape(NCTopError):
    pass


class NotEmbedding(NCTopError):
    """A vector does not span a copy of the requested simple."""


class NonSplitFactor(NCTopError):
    """A composition factor is not one of the split simples over F_p."""


class BudgetExceeded(NCTopError):
    pass


class InvalidCover(NCTopError):
    pass


class NotIdempotent(NCTopError):
    pass


class ParseError(NCTopError, ValueError):
    pass
