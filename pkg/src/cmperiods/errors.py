"""Exception types shared across the package."""


class CMPeriodsError(Exception):
    """Base class for all package errors."""


class SpecError(CMPeriodsError):
    """Invalid configuration or character specification."""


class NonFundamentalDiscriminant(SpecError):
    """Discriminant is not a fundamental negative discriminant."""


class UnitCompatibilityError(SpecError):
    """Finite part is incompatible with the infinity type on a unit."""


class NonPrincipalIdeal(CMPeriodsError):
    """No generator found; the ideal is not principal (or h(D) > 1)."""


class ParityError(CMPeriodsError):
    """Evaluation point has the wrong parity for the character."""


class PoleError(CMPeriodsError):
    """Evaluation requested at a pole."""


class ConvergenceError(CMPeriodsError):
    """Requested accuracy is not certifiable with the allowed number of terms."""


class CalibrationError(CMPeriodsError):
    """No (conductor, root number) pair satisfies the functional equation."""


class NonvanishingSearchError(CMPeriodsError):
    """Could not find a twist with a provably nonzero L-value."""
