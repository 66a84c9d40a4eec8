"""Exception hierarchy shared by every module of the package."""


class ZDGraphError(Exception):
    """Base class for all errors raised by zdgraphs."""


class InputError(ZDGraphError, ValueError):
    """An argument is malformed or out of range."""


class ResourceError(ZDGraphError, RuntimeError):
    """A configured size cap would be exceeded."""


class UnsupportedModeError(ZDGraphError, ValueError):
    """The operation needs prime-field arithmetic but the model uses support semantics."""


class UnsupportedDomainError(ZDGraphError, ValueError):
    """The model lies outside the hypotheses under which a formula applies."""


class UnsupportedCardinalError(ZDGraphError, ValueError):
    """Cardinal arithmetic outside the represented fragment."""


class AmbiguityError(ZDGraphError, ValueError):
    """A cardinal difference is not determined by its operands."""
