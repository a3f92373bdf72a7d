"""Exception hierarchy shared by the kcover modules."""


class KCoverError(Exception):
    pass


class DomainError(KCoverError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class GenerationFailed(KCoverError, RuntimeError):
    """A randomized constructor gave up after its retry budget; retrying with another seed may succeed."""

    retryable = True


class BudgetExceeded(KCoverError, RuntimeError):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} set unions, budget is {budget}")


class EdgeListError(KCoverError, ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class EdgeListParseError(EdgeListError):
    pass


class VertexRangeError(EdgeListError):
    pass


class SelfLoopError(EdgeListError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class VerificationError(KCoverError, AssertionError):
    """A numerical identity or invariant that must hold did not."""
