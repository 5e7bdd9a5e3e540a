"""Exception types shared across the package."""


class PartitionResidueError(Exception):
    """Base class for all errors raised by this package."""


class CapacityError(PartitionResidueError, ValueError):
    """A requested table exceeds the configured memory budget."""


class BoundaryError(PartitionResidueError, ValueError):
    """An angle sits on a regime boundary where no single asymptotic applies."""


class SingularFactorError(PartitionResidueError, ZeroDivisionError):
    """A factor raised to a negative power vanishes."""

    def __init__(self, message: str, j: int):
        super().__init__(message)
        self.j = j


class BracketError(PartitionResidueError, RuntimeError):
    """A root-finding bracket shows no sign change."""


class KindError(PartitionResidueError, ValueError):
    """An operation was applied to a profile of the wrong kind."""
