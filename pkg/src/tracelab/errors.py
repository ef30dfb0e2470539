"""Exception types shared across the package."""


class TraceLabError(Exception):
    """Base class for every error raised by this package."""


class DomainError(TraceLabError):
    """An argument lies outside the mathematical domain of an operation."""


class ArgumentError(TraceLabError):
    """Structurally invalid argument: bad shape, range, or inconsistent sizes."""


class SingularityError(TraceLabError):
    """A quantity that must stay away from zero vanished."""


class ConvergenceError(TraceLabError):
    """An iterative routine failed to reach its target accuracy."""
