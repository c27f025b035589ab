"""
Table controller: exact term tables of a single polynomial.
"""
import argparse
import logging
from typing import Tuple

from qappell.infrastructure.serializers import csv_table, json_codec
from qappell.interface.cli.controllers.family_request import FamilyRequest

logger = logging.getLogger(__name__)


class TableController:
    """Controller for the table command."""

    def __init__(self, family_request: FamilyRequest):
        """
        Initialize the controller.

        Args:
            family_request: Resolves the requested family and polynomial
        """
        self.family_request = family_request

    def handle(self, args: argparse.Namespace) -> Tuple[str, int]:
        """
        Render P_n or Q_n.

        Returns:
            Output text and exit code
        """
        family, label, poly = self.family_request.polynomial(args)
        logger.info(f"Rendering {label} for {family.label()} at {family.ctx.describe()}")
        if args.format == "csv":
            return csv_table.to_csv(poly), 0
        payload = {
            "family": family.descriptor(),
            "polynomial": label,
            "n": args.n,
            "terms": poly.to_json(),
        }
        return json_codec.dumps(payload), 0
