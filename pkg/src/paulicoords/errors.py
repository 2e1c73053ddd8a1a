"""Exception types shared across the package."""


class PauliCoordsError(Exception):
    """Base class for all package-specific errors."""


class DomainError(PauliCoordsError, ValueError):
    """An argument is outside its documented range."""


class DimensionError(PauliCoordsError, ValueError):
    """A matrix or register dimension is inconsistent or too small."""


class StageError(PauliCoordsError, RuntimeError):
    """A pipeline object was used at the wrong stage."""


class ResourceLimitError(PauliCoordsError, RuntimeError):
    """A size guard protecting memory or runtime was exceeded."""


class NumericError(PauliCoordsError, RuntimeError):
    """A numerical routine failed to meet its accuracy contract."""


class FormatError(PauliCoordsError, ValueError):
    """A text input failed to parse."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
