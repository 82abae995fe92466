"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParityError(DomainError):
    """The branch-point count j is incompatible with the ramification
    partition: j + d - n must be even for an admissible boundary type."""


class ApplicabilityError(ValueError):
    """A construction that requires extra structure (for instance a
    ramification index equal to 1) was invoked where it does not apply."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; this signals a bug, not a
    bad input."""
