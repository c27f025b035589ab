"""
Eval controller: exact point evaluation.
"""
import argparse
import logging
from typing import Dict, Tuple

from qappell.domain.exceptions.domain_exceptions import InvalidOperandException, MissingAssignmentException
from qappell.domain.value_objects.rational import format_rational, parse_rational
from qappell.domain.value_objects.variable import Variable
from qappell.interface.cli.controllers.family_request import FamilyRequest

logger = logging.getLogger(__name__)


def parse_assignments(text: str) -> Dict[Variable, object]:
    """Parse "x=1/2,y=3" into a variable map."""
    point = {}
    for item in filter(None, (piece.strip() for piece in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep:
            raise InvalidOperandException(f"Assignment '{item}' must look like var=p/q")
        try:
            variable = Variable.of(name.strip())
        except ValueError as e:
            raise InvalidOperandException(str(e)) from e
        point[variable] = parse_rational(value)
    return point


class EvalController:
    """Controller for the eval command."""

    def __init__(self, family_request: FamilyRequest):
        self.family_request = family_request

    def handle(self, args: argparse.Namespace) -> Tuple[str, int]:
        point = parse_assignments(args.at)
        expected = [Variable.of(name) for name in args.vars]
        extra = sorted(v.value for v in point if v not in expected)
        if extra:
            raise InvalidOperandException(f"Variables {extra} do not occur in a polynomial in {args.vars}")
        for variable in expected:
            if variable not in point:
                raise MissingAssignmentException(variable.value)
        family, label, poly = self.family_request.polynomial(args)
        value = poly.evaluate(point)
        logger.info(f"{label} of {family.label()} at {args.at} = {value}")
        return format_rational(value) + "\n", 0
