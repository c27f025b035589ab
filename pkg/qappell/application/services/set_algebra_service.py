"""
Set algebra service: sums, products, inverses and the group laws of
deformed q-Appell sets.
"""
import itertools
import logging
from fractions import Fraction
from typing import Sequence

from qappell.application.services.appell_service import AppellService
from qappell.application.services.family_factory import FamilyFactory
from qappell.domain.exceptions.domain_exceptions import (
    ContextMismatchException,
    DegeneracyException,
    InvalidOperandException,
)
from qappell.domain.models.appell_family import AppellFamily
from qappell.domain.models.appell_set import AppellSet
from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.qcontext import QContext
from qappell.domain.models.series import TruncSeries
from qappell.domain.models.verification_report import VerificationReport
from qappell.domain.value_objects.variable import Variable

logger = logging.getLogger(__name__)

STAR_ROUTES = ("detfun", "matrix")
SCALAR_LAW_FACTORS = (Fraction(2), Fraction(-1, 3))


class SetAlgebraService:
    """
    Service for the algebra of deformed q-Appell sets.
    """

    def __init__(self, appell_service: AppellService, family_factory: FamilyFactory):
        """
        Initialize the service.

        Args:
            appell_service: Generates the set components
            family_factory: Rebuilds families from determining series
        """
        self.appell_service = appell_service
        self.family_factory = family_factory

    # construction

    def build_set(self, family: AppellFamily) -> AppellSet:
        """
        Cache P_0..P_N of a family; every P_n must have degree exactly n.
        """
        ctx = family.ctx
        if ctx.u == 0:
            raise DegeneracyException("u = 0 drops the degree of P_n for n >= 2")
        if family.a(0) == 0:
            raise DegeneracyException(f"{family.label()} has a_0 = 0, so P_n has degree below n")
        components = [self.appell_service.appell_poly(family, n) for n in range(family.order + 1)]
        return AppellSet.from_components(components, ctx, family)

    def from_series(self, series: TruncSeries) -> AppellSet:
        return self.build_set(self.family_factory.family_from_series(series, 1))

    def identity_set(self, ctx: QContext, order: int) -> AppellSet:
        """The set with determining series 1; its components are u^C(n,2) x^n."""
        return self.from_series(TruncSeries.one(order, ctx))

    # operations

    def set_add(self, f: AppellSet, g: AppellSet) -> AppellSet:
        """Componentwise sum, determined by A(t) + B(t)."""
        left, right = self._determining(f), self._determining(g)
        self._require_same_context(f, g)
        total = left + right
        if total.coeff(0) == 0:
            raise DegeneracyException("A(0) + B(0) = 0: the sum drops degree")
        return self.from_series(total)

    def set_scale(self, f: AppellSet, factor: Fraction) -> AppellSet:
        """factor * f, determined by factor * A(t)."""
        factor = Fraction(factor)
        if factor == 0:
            raise DegeneracyException("Scaling by 0 leaves no polynomial set")
        return self.from_series(self._determining(f).scale(factor))

    def set_star(self, f: AppellSet, g: AppellSet, route: str = "detfun") -> AppellSet:
        """
        Product of sets.

        Routes:
            detfun: the set determined by A(t) B(t)
            matrix: (f*g)_n(x) = sum_k f(n, k) g_k(x)
        """
        self._require_same_context(f, g)
        if route == "detfun":
            return self.from_series(self._determining(f).mul(self._determining(g)))
        if route == "matrix":
            order = min(f.order, g.order)
            components = []
            for n in range(order + 1):
                total = MultiPoly.zero()
                for k in range(n + 1):
                    if f.f(n, k):
                        total = total + g.component(k).scale(f.f(n, k))
                components.append(total)
            return AppellSet.from_components(components, f.ctx)
        raise ValueError(f"Unknown star route '{route}' (expected one of {', '.join(STAR_ROUTES)})")

    def set_inverse(self, f: AppellSet) -> AppellSet:
        """The set determined by A(t)^-1."""
        return self.from_series(self._determining(f).inverse())

    # checks

    def group_laws_check(self, sets: Sequence[AppellSet], n_max: int) -> VerificationReport:
        """
        Commutativity, associativity, identity, inverses, the scalar laws and
        commutativity of +, all on the determining-function route.
        """
        if not sets:
            raise InvalidOperandException("Group law check needs at least one set")
        ctx = sets[0].ctx
        for other in sets[1:]:
            self._require_same_context(sets[0], other)
        n_max = min([n_max] + [s.order for s in sets])
        identity = self.identity_set(ctx, n_max)
        comparisons = []

        def agree(label: str, left: AppellSet, right: AppellSet) -> None:
            comparisons.extend((f"{label} n={n}", left.component(n), right.component(n)) for n in range(n_max + 1))

        for i, f in enumerate(sets):
            agree(f"f{i}*I = f{i}", self.set_star(f, identity), f)
            agree(f"f{i}*f{i}^-1 = I", self.set_star(f, self.set_inverse(f)), identity)
        for (i, f), (j, g) in itertools.combinations(enumerate(sets), 2):
            agree(f"f{i}*f{j} = f{j}*f{i}", self.set_star(f, g), self.set_star(g, f))
            try:
                agree(f"f{i}+f{j} = f{j}+f{i}", self.set_add(f, g), self.set_add(g, f))
            except DegeneracyException:
                logger.debug(f"Sum f{i}+f{j} degenerates; commutativity of + skipped")
            for factor in SCALAR_LAW_FACTORS:
                product = self.set_star(f, g)
                scaled_left = self.set_star(self.set_scale(f, factor), g)
                agree(f"({factor}f{i})*f{j} = f{i}*({factor}f{j})", scaled_left, self.set_star(f, self.set_scale(g, factor)))
                agree(f"({factor}f{i})*f{j} = {factor}(f{i}*f{j})", scaled_left, self.set_scale(product, factor))
        for (i, f), (j, g), (k, h) in itertools.permutations(enumerate(sets), 3):
            if i < k:
                agree(f"f{i}*(f{j}*f{k}) = (f{i}*f{j})*f{k}",
                      self.set_star(f, self.set_star(g, h)), self.set_star(self.set_star(f, g), h))
        return VerificationReport.compare(
            "group_laws", "(A(q;u), *) is a commutative group with identity I and inverses", ctx, n_max, comparisons,
            notes=["products formed on the determining-function route"],
        )

    def route_agreement_check(self, f: AppellSet, g: AppellSet, n_max: int) -> VerificationReport:
        """
        Matrix route against determining-function route. The routes must
        agree at u = 1; elsewhere a disagreement is recorded as a finding.
        """
        ctx = f.ctx
        n_max = min(n_max, f.order, g.order)
        matrix = self.set_star(f, g, "matrix")
        detfun = self.set_star(f, g, "detfun")
        identity = self.identity_set(ctx, n_max)
        with_identity = self.set_star(f, identity, "matrix")
        route_pairs = [(f"n={n}", matrix.component(n), detfun.component(n)) for n in range(n_max + 1)]
        identity_pairs = [(f"f*I n={n}", with_identity.component(n), f.component(n)) for n in range(n_max + 1)]
        if ctx.u == 1:
            return VerificationReport.compare(
                "star_route_agreement", "sum_k f(n,k) g_k(x) = P_n of A(t)B(t)", ctx, n_max,
                route_pairs + identity_pairs)
        report = VerificationReport.compare(
            "star_route_agreement", "sum_k f(n,k) g_k(x) = P_n of A(t)B(t)", ctx, n_max, [],
            notes=["routes are required to agree only at u = 1"])
        if not report.record_printed_form("matrix route equals determining-function route", route_pairs):
            logger.warning(f"Star routes disagree at {ctx.describe()}")
        report.record_printed_form("f*I = f in the matrix route", identity_pairs)
        return report

    def closure_check(self, f: AppellSet, g: AppellSet, n_max: int) -> VerificationReport:
        """
        f*g satisfies the deformed Appell recursion, its determining series is
        the product of the operands' series, and (f*g)*g^-1 recovers f.
        """
        ctx = f.ctx
        n_max = min(n_max, f.order, g.order)
        h = self.set_star(f, g)
        recovered = self.set_star(h, self.set_inverse(g))
        comparisons = []
        for n in range(1, n_max + 1):
            comparisons.append((
                f"recursion n={n}", h.component(n).q_derive(Variable.X, ctx),
                h.component(n - 1).subst_scale(Variable.X, ctx.u).scale(ctx.q_number(n)),
            ))
        product = self._determining(f).mul(self._determining(g))
        comparisons += [
            (f"series t^{n}", self._determining(h).coeff(n), product.coeff(n)) for n in range(product.order + 1)
        ]
        comparisons += [(f"recover n={n}", recovered.component(n), f.component(n)) for n in range(n_max + 1)]
        return VerificationReport.compare(
            "star_closure", "f*g in A(q;u) with determining function A(t)B(t); h = f*g gives f = h*g^-1",
            ctx, n_max, comparisons,
        )

    @staticmethod
    def _determining(s: AppellSet) -> TruncSeries:
        if s.family is None:
            raise InvalidOperandException("Set has no determining series (built on the matrix route)")
        return s.family.determining

    @staticmethod
    def _require_same_context(f: AppellSet, g: AppellSet) -> None:
        if f.ctx.key != g.ctx.key:
            raise ContextMismatchException("Appell sets were built over different (q, u)")
