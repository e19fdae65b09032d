"""Exception types raised by jumpjacobi."""


class DomainError(ValueError):
    """Argument outside the region where an operation is defined or supported."""


class ConvergenceError(ArithmeticError):
    """An iterative or refinement procedure failed to reach its tolerance."""


class OrthogonalityError(ConvergenceError):
    """The computed polynomials lost orthogonality beyond the allowed defect."""
