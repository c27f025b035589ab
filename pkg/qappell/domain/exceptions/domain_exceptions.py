"""
Domain-specific exceptions.
"""


class DomainException(Exception):
    """Base exception for domain layer."""
    pass


class InvalidRationalException(DomainException):
    """Raised when a rational literal cannot be parsed as "p/q" or "p"."""
    pass


class UnsupportedParameterException(DomainException):
    """Raised when a (q, u) pair cannot host the q-divided-power normalization."""
    pass


class QIsOneException(DomainException):
    """Raised by operations whose defining formula divides by (1 - q)."""
    pass


class DeformationZeroException(DomainException):
    """Raised when u = 0 would appear in a denominator."""
    pass


class ContextMismatchException(DomainException):
    """Raised when operands were built over different (q, u) contexts."""
    pass


class ZeroConstantTermException(DomainException):
    """Raised when a series with vanishing constant term has to be inverted."""
    pass


class NonScalarCoefficientsException(DomainException):
    """Raised when a determining series carries variables in its coefficients."""
    pass


class IndexOutOfRangeException(DomainException):
    """Raised when a polynomial index exceeds the truncation order."""
    pass


class MissingAssignmentException(DomainException):
    """Raised when a polynomial is evaluated without a value for one of its variables."""

    def __init__(self, variable: str):
        super().__init__(f"No value assigned to variable '{variable}'")
        self.variable = variable


class DegreeOverflowException(DomainException):
    """Raised when a polynomial exceeds the per-variable degree guard."""
    pass


class DegeneracyException(DomainException):
    """Raised when a polynomial set would lose its exact-degree property."""
    pass


class InvalidOperandException(DomainException):
    """Raised when an operator receives a polynomial outside its domain."""
    pass


class InvalidGridException(DomainException):
    """Raised when a grid specification is empty or malformed."""
    pass


class FamilyConstructionException(DomainException):
    """Raised when a family descriptor cannot be turned into a family."""
    pass
