"""
Resolves the family and polynomial requested by table/eval arguments.
"""
import argparse
import logging
from typing import Tuple

from qappell.application.services.appell_service import AppellService
from qappell.application.services.family_factory import FamilyFactory
from qappell.application.services.operator_service import OperatorService
from qappell.domain.exceptions.domain_exceptions import IndexOutOfRangeException, InvalidOperandException
from qappell.domain.models.appell_family import AppellFamily, FamilyKind
from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.qcontext import QContext
from qappell.domain.ports.descriptor_source_port import DescriptorSourcePort

logger = logging.getLogger(__name__)


class FamilyRequest:
    """Builds a family and one of its polynomials from parsed arguments."""

    def __init__(self, family_factory: FamilyFactory, appell_service: AppellService,
                 operator_service: OperatorService, descriptor_source: DescriptorSourcePort):
        self.family_factory = family_factory
        self.appell_service = appell_service
        self.operator_service = operator_service
        self.descriptor_source = descriptor_source

    def family(self, args: argparse.Namespace) -> AppellFamily:
        if args.n < 0:
            raise IndexOutOfRangeException(f"--n must be >= 0, got {args.n}")
        order = args.n if args.order is None else args.order
        if order < args.n:
            raise IndexOutOfRangeException(f"--order {order} is below --n {args.n}")
        ctx = QContext.of(args.q, args.u)
        kind = FamilyKind.of(args.family)
        alpha = 1 if args.alpha is None else args.alpha
        if kind is not FamilyKind.CUSTOM:
            return self.family_factory.named_family(kind, alpha, order, ctx)
        if args.custom:
            descriptor = dict(self.descriptor_source.load_family_descriptor(args.custom))
            if args.alpha is not None:
                descriptor["alpha"] = args.alpha
            return self.family_factory.from_descriptor(descriptor, ctx, order)
        if args.base:
            return self.family_factory.custom(args.base.split(","), alpha, order, ctx)
        raise InvalidOperandException("--family custom needs --base or --custom")

    def polynomial(self, args: argparse.Namespace) -> Tuple[AppellFamily, str, MultiPoly]:
        """
        Returns:
            The family, a label such as "P_3(x,y;u)", and the polynomial
        """
        family = self.family(args)
        n = args.n
        if args.vars == "xyz":
            return family, f"Q_{n}(x,y,z;u)", self.operator_service.quasi_trivar(family, n)
        if args.vars == "xy" and args.quasi:
            return family, f"Q_{n}(x,y;u)", self.operator_service.quasi_homog(family, n)
        if args.quasi:
            raise InvalidOperandException("--quasi needs --vars xy or xyz")
        if args.vars == "xy":
            return family, f"P_{n}(x,y;u)", self.appell_service.appell_bivar(family, n)
        return family, f"P_{n}(x;u)", self.appell_service.appell_poly(family, n)
