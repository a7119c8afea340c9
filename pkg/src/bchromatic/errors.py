"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class ParseError(InputError):
    """Raised when a graph or coloring file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GenerationError(RuntimeError):
    """Raised when a randomized generator gives up after its restart cap."""


class InfeasibleError(RuntimeError):
    """Raised when a partial coloring cannot be extended as requested."""
