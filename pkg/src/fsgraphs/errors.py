"""Exception types shared across the package."""


class FSError(Exception):
    """Base class for every error raised by fsgraphs."""


class GraphSizeError(FSError, ValueError):
    """A graph would exceed the supported vertex count."""


class ParameterError(FSError, ValueError):
    """A family constructor received parameters outside its domain."""


class ResourceError(FSError, MemoryError):
    """A computation would exceed the configured state or memory budget."""


class BudgetExceeded(ResourceError):
    """A bounded exploration ran out of budget before finishing.

    ``visited`` holds the number of states seen when exploration stopped.
    """

    def __init__(self, message, visited):
        super().__init__(message)
        self.visited = visited
