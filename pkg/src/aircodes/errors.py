class ParameterError(ValueError):
    """Raised when problem parameters or matrix shapes are invalid."""


class DecodingError(RuntimeError):
    """Raised when a receiver cannot recover one of its wanted coordinates."""

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)
