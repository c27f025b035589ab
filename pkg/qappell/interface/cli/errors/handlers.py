"""
Global error handlers mapping exceptions to exit codes.
"""
import logging
import sys
from typing import TYPE_CHECKING

from qappell.domain.exceptions.domain_exceptions import (
    ContextMismatchException,
    DeformationZeroException,
    DegeneracyException,
    DomainException,
    FamilyConstructionException,
    IndexOutOfRangeException,
    InvalidGridException,
    InvalidOperandException,
    InvalidRationalException,
    MissingAssignmentException,
    NonScalarCoefficientsException,
    QIsOneException,
    UnsupportedParameterException,
    ZeroConstantTermException,
)

if TYPE_CHECKING:
    from qappell.main import QAppellApp

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3


def _report(error: Exception) -> None:
    print(f"error: {error}", file=sys.stderr)


def register_error_handlers(app: "QAppellApp") -> None:
    """
    Register global error handlers.

    Args:
        app: Command-line application instance
    """

    @app.errorhandler(
        InvalidRationalException,
        UnsupportedParameterException,
        QIsOneException,
        DeformationZeroException,
        ContextMismatchException,
        IndexOutOfRangeException,
        MissingAssignmentException,
        InvalidOperandException,
        InvalidGridException,
        ValueError,
    )
    def usage_error(error: Exception) -> int:
        """Bad flags, parameters or input files."""
        logger.warning(f"Rejected arguments: {error}")
        _report(error)
        return EXIT_USAGE

    @app.errorhandler(
        FamilyConstructionException,
        ZeroConstantTermException,
        NonScalarCoefficientsException,
        DegeneracyException,
    )
    def construction_error(error: Exception) -> int:
        """The requested family or set cannot be built."""
        logger.warning(f"Family construction failed: {error}")
        _report(error)
        return EXIT_CONSTRUCTION

    @app.errorhandler(DomainException)
    def domain_error(error: Exception) -> int:
        logger.error(f"Computation failed: {error}")
        _report(error)
        return EXIT_FAILURE

    @app.errorhandler(Exception)
    def internal_error(error: Exception) -> int:
        logger.error(f"Unexpected error: {error}", exc_info=True)
        _report(error)
        return EXIT_FAILURE
