"""
Verify controller: runs identity suites and emits the report.
"""
import argparse
import logging
from typing import Tuple

from qappell.application.services.verification_service import SweepSettings, VerificationService
from qappell.config.settings import Config
from qappell.domain.models.grid_spec import GridPoint, GridSpec
from qappell.domain.ports.descriptor_source_port import DescriptorSourcePort
from qappell.domain.value_objects.rational import parse_rational
from qappell.infrastructure.serializers import json_codec

logger = logging.getLogger(__name__)


def default_grid(config: Config) -> GridSpec:
    """Cartesian default grid plus the Exton point (q, u) = (1/4, 1/2)."""
    grid = GridSpec.from_values(config.DEFAULT_GRID_Q, config.DEFAULT_GRID_U)
    extra = tuple(GridPoint(parse_rational(q), parse_rational(u)) for q, u in config.DEFAULT_GRID_EXTRA_POINTS)
    return GridSpec(grid.points + extra)


class VerifyController:
    """Controller for the verify command."""

    def __init__(self, verification_service: VerificationService, descriptor_source: DescriptorSourcePort,
                 config: Config):
        """
        Initialize the controller.

        Args:
            verification_service: Runs the suites
            descriptor_source: Reads grid files
            config: Defaults for the default grid
        """
        self.verification_service = verification_service
        self.descriptor_source = descriptor_source
        self.config = config

    def handle(self, args: argparse.Namespace) -> Tuple[str, int]:
        """
        Returns:
            Report JSON and exit code (0 iff every identity passed)
        """
        grid = default_grid(self.config) if args.grid == "default" else self.descriptor_source.load_grid(args.grid)
        if args.max_n < 0 or args.order < 0:
            raise ValueError("--max-n and --order must be >= 0")
        settings = SweepSettings(
            max_n=args.max_n,
            order=args.order,
            leibniz_pairs=args.leibniz_pairs,
            mehler_order=args.mehler_order,
            rogers_order=args.rogers_order,
            genfun_order=args.genfun_order,
        )
        self.verification_service.max_workers = max(1, args.workers)
        suites = args.suite or ["all"]
        logger.info(f"Verifying {', '.join(suites)} over {len(grid.points)} grid points")
        report = self.verification_service.run(suites, grid, settings)
        return json_codec.dumps(report), 0 if report["pass"] else 1
