"""Exception types raised across the package."""


class SignedCoronaError(Exception):
    """Base class for all package errors."""


class NonEvenPolynomial(SignedCoronaError, ValueError):
    pass


class InvalidGraph(SignedCoronaError, ValueError):
    pass


class SizeLimitExceeded(SignedCoronaError):
    pass


class NotBipartite(SignedCoronaError, ValueError):
    pass


class PartsUnequal(SignedCoronaError, ValueError):
    pass


class NotRegular(SignedCoronaError, ValueError):
    pass


class PreconditionUnbalancedInput(SignedCoronaError, ValueError):
    """The base graph or a satellite is unbalanced, so the unbalance criterion does not apply."""


class InternalInconsistency(SignedCoronaError, AssertionError):
    """A factorization failed to clear to a polynomial; indicates a bug."""


class GraphFileError(SignedCoronaError, ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
