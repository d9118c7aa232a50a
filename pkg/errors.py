class ModprodError(ValueError):
    """Base class for every error raised by the toolkit."""


class GraphFormatError(ModprodError):
    """
    Malformed edge-list input. Carries the offending line number (1-based).
    """

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class PreconditionError(ModprodError):
    pass


class DisconnectedGraphError(PreconditionError):
    pass


class FamilyDomainError(ModprodError):
    pass


class SizeGuardError(ModprodError):
    pass


class CoverWitnessError(ModprodError):
    """A solver witness that leaves an edge uncovered."""
