"""
Verification service: runs identity suites over a grid of (q, u) points.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Sequence

from qappell.application.services.appell_service import AppellService
from qappell.application.services.family_factory import FamilyFactory
from qappell.application.services.operator_service import OperatorService
from qappell.application.services.qcore_service import QCoreService, random_series
from qappell.application.services.set_algebra_service import SetAlgebraService
from qappell.domain.exceptions.domain_exceptions import DomainException
from qappell.domain.models.appell_family import AppellFamily, FamilyKind
from qappell.domain.models.grid_spec import GridPoint, GridSpec, SuiteRequirements
from qappell.domain.models.qcontext import QContext
from qappell.domain.models.verification_report import VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepSettings:
    """Bounds shared by every suite in one run."""
    max_n: int
    order: int
    leibniz_pairs: int
    mehler_order: int
    rogers_order: int
    genfun_order: int


@dataclass(frozen=True)
class Suite:
    name: str
    anchor: str
    requirements: SuiteRequirements
    run: Callable[[QContext, SweepSettings], List[VerificationReport]]


class VerificationService:
    """
    Service that sweeps identity suites over a grid.
    """

    def __init__(self, qcore_service: QCoreService, family_factory: FamilyFactory,
                 appell_service: AppellService, operator_service: OperatorService,
                 set_algebra_service: SetAlgebraService, max_workers: int = 4):
        """
        Initialize the service.

        Args:
            qcore_service: q-kernel and series checks
            family_factory: Builds the families each suite runs on
            appell_service: Structure identities
            operator_service: Operator and generating-function identities
            set_algebra_service: Set algebra laws
            max_workers: Thread-pool size for grid points
        """
        self.qcore_service = qcore_service
        self.family_factory = family_factory
        self.appell_service = appell_service
        self.operator_service = operator_service
        self.set_algebra_service = set_algebra_service
        self.max_workers = max(1, max_workers)
        self.suites: Dict[str, Suite] = {suite.name: suite for suite in self._build_suites()}

    @property
    def suite_names(self) -> List[str]:
        return list(self.suites)

    def run(self, names: Sequence[str], grid: GridSpec, settings: SweepSettings) -> Dict[str, Any]:
        """
        Run suites over the grid.

        Args:
            names: Suite names, or ["all"]
            grid: Grid of (q, u) points
            settings: Index and order bounds

        Returns:
            {"pass": bool, "suites": [{"suite", "anchor", "excluded_points", "reports"}]}
        """
        if "all" in names:
            names = self.suite_names
        unknown = [name for name in names if name not in self.suites]
        if unknown:
            raise ValueError(f"Unknown suite(s): {', '.join(unknown)}")
        results = []
        for name in names:
            results.append(self.run_suite(self.suites[name], grid, settings))
        passed = all(report["pass"] for result in results for report in result["reports"])
        return {"pass": passed, "suites": results}

    def run_suite(self, suite: Suite, grid: GridSpec, settings: SweepSettings) -> Dict[str, Any]:
        points, excluded = grid.select(suite.requirements)
        logger.info(f"Suite {suite.name}: {len(points)} grid points, {len(excluded)} excluded")

        def run_point(point: GridPoint) -> List[VerificationReport]:
            return self._guarded(suite, point, settings)

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            per_point = list(executor.map(run_point, points))
        reports = [report.to_dict() for batch in per_point for report in batch]
        failed = sum(1 for report in reports if not report["pass"])
        if failed:
            logger.warning(f"Suite {suite.name}: {failed} of {len(reports)} identities failed")
        return {"suite": suite.name, "anchor": suite.anchor, "excluded_points": excluded, "reports": reports}

    def _guarded(self, suite: Suite, point: GridPoint, settings: SweepSettings) -> List[VerificationReport]:
        try:
            return suite.run(QContext(point.q, point.u), settings)
        except (DomainException, ArithmeticError) as e:
            logger.error(f"Suite {suite.name} raised at {point.describe()}: {e}", exc_info=True)
            return [VerificationReport(suite.name, suite.anchor, point.describe(), settings.order, False,
                                       notes=[f"error: {type(e).__name__}: {e}"])]

    # families

    def _base_one(self, order: int, ctx: QContext) -> AppellFamily:
        return self.family_factory.custom([1], 1, order, ctx)

    def _named(self, kind: FamilyKind, alpha: int, order: int, ctx: QContext) -> AppellFamily:
        return self.family_factory.named_family(kind, alpha, order, ctx)

    # suites

    def _build_suites(self) -> List[Suite]:
        anywhere = SuiteRequirements()
        series_based = SuiteRequirements(divided_powers=True)
        return [
            Suite("qcore", "[n]_q, [n]_q!, [n k]_q, (a;q)_n and the series engine", anywhere, self._qcore),
            Suite("leibniz", "D_q^n (fg) = sum_k q^(k(k-n)) [n k]_q D_q^k f D_q^(n-k) {g(q^k x)}",
                  SuiteRequirements(q_nonzero=True), self._leibniz),
            Suite("derivatives", "D_{q,x} P_n(x,y;u) = [n]_q P_(n-1)(x,y;u); D_{q,y} P_n(x,y;u) = [n]_q P_(n-1)(x,uy;u)",
                  series_based, self._derivatives),
            Suite("characterization", "recursion <=> explicit sum <=> generating function <=> operator form",
                  series_based, self._characterization),
            Suite("asequence", "sum_k [n k]_q u^(k(k-n)) a^k A_(n-k)(a;u) = 1",
                  SuiteRequirements(q_not_one=True, u_nonzero=True, divided_powers=True), self._asequence),
            Suite("addition", "P_n^(alpha+beta)(x,y;u) = sum [n k]_q P_k^(alpha)(x) P_(n-k)^(beta)(y;u)",
                  series_based, self._addition),
            Suite("operators", "T(yD_q|u){x^n} = R_n(x,y;u|q); Q_n(x,y,z;u) = A_alpha(x,y;D_q|u){z^n}",
                  series_based, self._operators),
            Suite("genfun", "sum Q_n(x,y,z;u) t^n/[n]! = e_q(zt) A^alpha(yt) e_q(xyt,u)",
                  series_based, self._genfun),
            Suite("mehler", "Mehler formula for sum Q_n^(alpha)(x,y,z;u) P_n^(beta)(w) t^n/[n]!",
                  SuiteRequirements(q_not_one=True, u_nonzero=True, divided_powers=True), self._mehler),
            Suite("rogers", "Rogers formula for sum sum Q_(n+m)(x,y,z;u) t^n/[n]! s^m/[m]!",
                  SuiteRequirements(q_not_one=True, divided_powers=True), self._rogers),
            Suite("setalgebra", "(A(q;u), *) is a commutative group",
                  SuiteRequirements(q_not_one=True, u_nonzero=True, divided_powers=True), self._setalgebra),
        ]

    def _qcore(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        reports = [
            self.qcore_service.kernel_check(ctx),
            self.qcore_service.derivative_kernel_check(ctx),
        ]
        # the series engine needs every [n]_q! up to the order to be nonzero
        if ctx.factorials_invertible(max(settings.order, 2)):
            reports.append(self.qcore_service.series_check(ctx, settings.order))
        return reports

    def _leibniz(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        return [self.qcore_service.leibniz_check(ctx, settings.leibniz_pairs)]

    def _derivatives(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        families = [self._base_one(settings.max_n, ctx)]
        for kind in (FamilyKind.BERNOULLI, FamilyKind.EULER, FamilyKind.GENOCCHI):
            families += [self._named(kind, alpha, settings.max_n, ctx) for alpha in (1, 2)]
        reports = []
        for family in families:
            reports += self.appell_service.derivative_checks(family, settings.max_n)
        return reports

    def _characterization(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        families = [
            self._base_one(settings.max_n, ctx),
            self._named(FamilyKind.BERNOULLI, 1, settings.max_n, ctx),
            self._named(FamilyKind.EULER, 1, settings.max_n, ctx),
            self._named(FamilyKind.BERNOULLI, 2, settings.max_n, ctx),
            self._named(FamilyKind.EULER, -1, settings.max_n, ctx),
        ]
        return [self.appell_service.characterization_check(family, settings.max_n) for family in families]

    def _asequence(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        n_max = min(settings.max_n, 6)
        return [
            self.appell_service.a_sequence_checks(settings.max_n, ctx),
            self.appell_service.reproduce_check(self._base_one(n_max, ctx), n_max),
            self.appell_service.reproduce_check(self._named(FamilyKind.BERNOULLI, 1, n_max, ctx), n_max),
        ]

    def _addition(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        n = settings.max_n
        bernoulli = self._named(FamilyKind.BERNOULLI, 1, n, ctx)
        euler = self._named(FamilyKind.EULER, 1, n, ctx)
        mixed = self.family_factory.family_from_series(bernoulli.determining.mul(euler.determining), 1)
        reports = [
            self.appell_service.bivariate_routes_check(family, n)
            for family in (self._base_one(n, ctx), self._named(FamilyKind.BERNOULLI, 2, n, ctx), euler)
        ]
        reports += [self.appell_service.generating_function_check(family, n) for family in (bernoulli, euler)]
        reports += [
            self.appell_service.addition_check(bernoulli, bernoulli, self._named(FamilyKind.BERNOULLI, 2, n, ctx), n),
            self.appell_service.addition_check(bernoulli, euler, mixed, n),
            self.appell_service.addition_check(bernoulli, self._base_one(n, ctx), bernoulli, n),
            self.appell_service.inverse_convolution_check(bernoulli, self._named(FamilyKind.BERNOULLI, -1, n, ctx), n),
            self.appell_service.inverse_convolution_check(euler, self._named(FamilyKind.EULER, -1, n, ctx), n),
        ]
        return reports

    def _operators(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        n = settings.max_n
        families = [
            self._base_one(n, ctx),
            self._named(FamilyKind.BERNOULLI, 1, n, ctx),
            self._named(FamilyKind.EULER, 1, n, ctx),
            self._named(FamilyKind.GENOCCHI, 1, n, ctx),
        ]
        reports = []
        for family in families:
            reports.append(self.operator_service.t_operator_check(family, n))
            reports.append(self.operator_service.quasi_operator_check(family, n))
            reports.append(self.operator_service.quasi_derivative_check(family, n))
            if ctx.u != 0:
                reports.append(self.operator_service.relating_identity_check(family, n))
        return reports

    def _genfun(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        order = settings.genfun_order
        shift_laws = ctx.q != 1
        reports = [self.operator_service.eq_shift_check(6, order, ctx)] if shift_laws else []
        for family in (
            self._base_one(order, ctx),
            self._named(FamilyKind.BERNOULLI, 1, order, ctx),
            self._named(FamilyKind.EULER, 1, order, ctx),
        ):
            reports.append(self.operator_service.quasi_genfun_check(family, order))
            if shift_laws:
                reports.append(self.operator_service.quasi_weighted_genfun_check(family, order))
        return reports

    def _mehler(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        order = settings.mehler_order
        base = self._base_one(order, ctx)
        bernoulli = self._named(FamilyKind.BERNOULLI, 1, order, ctx)
        euler = self._named(FamilyKind.EULER, 1, order, ctx)
        reports = [
            self.operator_service.mehler_inner_check(family, k, order)
            for family in (base, bernoulli) for k in range(min(3, order) + 1)
        ]
        reports.append(self.operator_service.mehler_verify(base, base, order))
        reports.append(self.operator_service.mehler_verify(bernoulli, euler, order))
        return reports

    def _rogers(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        order = settings.rogers_order
        return [
            self.operator_service.rogers_verify(self._base_one(order, ctx), order),
            self.operator_service.rogers_verify(self._named(FamilyKind.BERNOULLI, 1, order, ctx), order),
            self.operator_service.rogers_verify(self._named(FamilyKind.GENOCCHI, 1, order, ctx), order),
        ]

    def _setalgebra(self, ctx: QContext, settings: SweepSettings) -> List[VerificationReport]:
        n = settings.max_n
        algebra = self.set_algebra_service
        bernoulli = algebra.build_set(self._named(FamilyKind.BERNOULLI, 1, n, ctx))
        euler = algebra.build_set(self._named(FamilyKind.EULER, 1, n, ctx))
        rng_series = random_series(self._rng(), n, ctx)
        custom = algebra.from_series(rng_series)
        return [
            algebra.group_laws_check([bernoulli, euler, algebra.set_inverse(bernoulli)], n),
            algebra.group_laws_check([bernoulli, euler, custom], min(n, 5)),
            algebra.route_agreement_check(bernoulli, euler, n),
            algebra.closure_check(bernoulli, euler, n),
            algebra.closure_check(custom, bernoulli, n),
        ]

    def _rng(self) -> random.Random:
        return random.Random(self.qcore_service.seed)
