"""Exception hierarchy shared by all modules."""


class CaterpackError(Exception):
    """Base class for library errors."""


class ParameterError(CaterpackError, ValueError):
    """Invalid or out-of-range input parameters."""


class InfeasibleError(CaterpackError):
    """A construction's sufficient conditions do not hold.

    ``conditions`` names every violated condition.
    """

    def __init__(self, conditions):
        self.conditions = list(conditions)
        super().__init__("infeasible: " + "; ".join(self.conditions))


class ConstructionError(CaterpackError):
    """A construction ran but produced no certified layout."""


class VerificationError(CaterpackError):
    """A produced layout failed one of its verification invariants."""


class PreconditionError(CaterpackError):
    """An operation was called on input that violates its precondition."""


class DegenerateGeometryError(CaterpackError):
    """Floating-point geometry hit a near-degenerate configuration."""
