"""Exception types shared by every finder."""


class PreconditionError(ValueError):
    """Input does not satisfy a finder's hypothesis (density, degree, order, ...)."""


class InvariantError(RuntimeError):
    """An internal guarantee failed; always indicates a bug, never bad input."""


class FormatError(ValueError):
    """Malformed graph, embedding or certificate file."""
