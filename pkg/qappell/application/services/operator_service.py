"""
Operator service: q-exponential and q-Appell operators, quasi-q-Appell
polynomials and the generating-function, Mehler and Rogers verifiers.
"""
import logging

from qappell.domain.exceptions.domain_exceptions import (
    ContextMismatchException,
    DegeneracyException,
    IndexOutOfRangeException,
    InvalidOperandException,
)
from qappell.domain.models.appell_family import AppellFamily
from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.operator_spec import OperatorFlavor, OperatorSpec
from qappell.domain.models.qcontext import QContext, binom2
from qappell.domain.models.series import (
    BiTruncSeries,
    TruncSeries,
    big_q_exp,
    bi_outer,
    deformed_exp,
    pochhammer_series,
    q_exp,
)
from qappell.domain.models.verification_report import VerificationReport
from qappell.domain.value_objects.variable import Variable
from qappell.application.services.appell_service import AppellService

logger = logging.getLogger(__name__)

X, Y, Z, W = Variable.X, Variable.Y, Variable.Z, Variable.W

MEHLER_READINGS = ("proof", "printed")


def _delta(index: int, order: int, ctx: QContext) -> TruncSeries:
    """The series t^index/[index]_q!."""
    return TruncSeries.tabulate(order, ctx, lambda m: 1 if m == index else 0)


class OperatorService:
    """
    Service for the deformed q-Appell operators and the quasi polynomials.
    """

    def __init__(self, appell_service: AppellService):
        """
        Initialize the service.

        Args:
            appell_service: Provides P_n(x;u), P_n(x,y;u) and R_n
        """
        self.appell_service = appell_service

    # operators

    def apply_operator(self, spec: OperatorSpec, p: MultiPoly, ctx: QContext) -> MultiPoly:
        """
        Apply sum_k w_k y^k D_q^k/[k]_q! to p. The sum stops at the degree of
        p in the derivative variable, so the result is exact.

        Args:
            spec: Operator flavor and family
            p: Polynomial free of y
            ctx: (q, u) parameters

        Returns:
            Polynomial image
        """
        if not p.free_of(Y):
            raise InvalidOperandException("Operator argument must be free of y")
        var = spec.derivative_variable
        total = MultiPoly.zero()
        for k in range(p.degree(var) + 1):
            derivative = p.q_derive_k(var, k, ctx)
            if not derivative:
                continue
            weight = self._operator_weight(spec, k, ctx) * MultiPoly.variable(Y, k)
            total = total + (weight * derivative).scale(1 / ctx.q_factorial(k))
        return total

    def _operator_weight(self, spec: OperatorSpec, k: int, ctx: QContext) -> MultiPoly:
        if spec.flavor is OperatorFlavor.T_EXPONENTIAL:
            return MultiPoly.constant(ctx.u ** binom2(k))
        if k > spec.family.order:
            raise IndexOutOfRangeException(f"Operator term {k} exceeds family order {spec.family.order}")
        if spec.flavor is OperatorFlavor.APPELL_UNIVAR:
            return MultiPoly.constant(ctx.u ** binom2(k) * spec.family.a(k))
        return self.appell_service.appell_poly(spec.family, k)

    def apply_T(self, p: MultiPoly, ctx: QContext) -> MultiPoly:
        """T(yD_q|u) p = sum_k u^C(k,2) y^k D_(q,x)^k p/[k]_q!."""
        return self.apply_operator(OperatorSpec.exponential(), p, ctx)

    def apply_T_series(self, series: TruncSeries) -> TruncSeries:
        """apply_T coefficient by coefficient."""
        return series.map_coeffs(lambda c: self.apply_T(c, series.ctx))

    # quasi polynomials

    def quasi_homog(self, family: AppellFamily, n: int) -> MultiPoly:
        """Q_n(x,y;u) = sum_k [n k]_q u^C(k,2) a_k y^k x^(n-k)."""
        self._require_index(family, n)
        ctx = family.ctx
        total = MultiPoly.zero()
        for k in range(n + 1):
            coefficient = ctx.q_binomial(n, k) * ctx.u ** binom2(k) * family.a(k)
            if coefficient:
                total = total + MultiPoly.monomial(coefficient, x=n - k, y=k)
        return total

    def quasi_trivar(self, family: AppellFamily, n: int) -> MultiPoly:
        """Q_n(x,y,z;u) = sum_k [n k]_q P_k(x;u) y^k z^(n-k)."""
        self._require_index(family, n)
        ctx = family.ctx
        total = MultiPoly.zero()
        for k in range(n + 1):
            monomial = MultiPoly.monomial(ctx.q_binomial(n, k), y=k, z=n - k)
            total = total + self.appell_service.appell_poly(family, k) * monomial
        return total

    # checks

    def t_operator_check(self, family: AppellFamily, n_max: int) -> VerificationReport:
        """T(x^n) = R_n, T(P_n(x)) = P_n(x,y;u) and T on the generating function."""
        ctx = family.ctx
        n_max = min(n_max, family.order)
        comparisons = []
        for n in range(n_max + 1):
            comparisons.append((f"T(x^{n})", self.apply_T(MultiPoly.variable(X, n), ctx), self.appell_service.homog_R(n, ctx)))
            comparisons.append((
                f"T(P_{n})", self.apply_T(self.appell_service.classical_poly(family, n), ctx),
                self.appell_service.appell_bivar(family, n),
            ))
        generating = family.determining.truncate(n_max).mul(q_exp(MultiPoly.variable(X), n_max, ctx))
        expected = generating.mul(deformed_exp(MultiPoly.variable(Y), ctx.u, n_max, ctx))
        image = self.apply_T_series(generating)
        comparisons += [(f"series t^{n}", image.coeff(n), expected.coeff(n)) for n in range(n_max + 1)]
        return VerificationReport.compare(
            f"t_operator[{family.label()}]",
            "T(yD_q|u){x^n} = R_n(x,y;u|q); T(yD_q|u){A^alpha(t) e_q(tx)} = A^alpha(t) e_q(tx) e_q(ty,u)",
            ctx, n_max, comparisons,
        )

    def quasi_operator_check(self, family: AppellFamily, n_max: int) -> VerificationReport:
        """Operator images of x^n and z^n equal the quasi polynomials."""
        ctx = family.ctx
        n_max = min(n_max, family.order)
        univar = OperatorSpec(OperatorFlavor.APPELL_UNIVAR, family)
        trivar = OperatorSpec(OperatorFlavor.APPELL_TRIVAR, family)
        comparisons = []
        for n in range(n_max + 1):
            comparisons.append((f"x^{n}", self.apply_operator(univar, MultiPoly.variable(X, n), ctx), self.quasi_homog(family, n)))
            comparisons.append((f"z^{n}", self.apply_operator(trivar, MultiPoly.variable(Z, n), ctx), self.quasi_trivar(family, n)))
        return VerificationReport.compare(
            f"quasi_operator[{family.label()}]",
            "Q_n(x,y,z;u) = A_alpha(x,y;D_q|u){z^n}; Q_n(x,y;u) = A_alpha(yD_q|u){x^n}",
            ctx, n_max, comparisons,
        )

    def quasi_derivative_check(self, family: AppellFamily, n_max: int) -> VerificationReport:
        """The q-derivative table of the bivariate and trivariate quasi polynomials."""
        ctx = family.ctx
        n_max = min(n_max, family.order)
        homog = [self.quasi_homog(family, n) for n in range(n_max + 1)]
        trivar = [self.quasi_trivar(family, n) for n in range(n_max + 1)]
        comparisons, printed = [], []
        for n in range(1, n_max + 1):
            qn = ctx.q_number(n)
            comparisons.append((f"D_x Q_{n}(x,y)", homog[n].q_derive(X, ctx), homog[n - 1].scale(qn)))
            shifted_homog = MultiPoly.zero()
            shifted_trivar = MultiPoly.zero()
            for k in range(n):
                shifted_homog = shifted_homog + MultiPoly.monomial(
                    ctx.q_binomial(n - 1, k) * ctx.u ** binom2(k) * family.a(k + 1) * ctx.u ** k, x=n - 1 - k, y=k)
                shifted_trivar = shifted_trivar + self.appell_service.appell_poly(family, k + 1) * MultiPoly.monomial(
                    ctx.q_binomial(n - 1, k), y=k, z=n - 1 - k)
            comparisons.append((f"D_y Q_{n}(x,y)", homog[n].q_derive(Y, ctx), shifted_homog.scale(qn)))
            y_times = MultiPoly.variable(Y)
            comparisons.append((
                f"D_x Q_{n}(x,y,z)", trivar[n].q_derive(X, ctx), (y_times * trivar[n - 1].subst_scale(X, ctx.u)).scale(qn)))
            comparisons.append((f"D_y Q_{n}(x,y,z)", trivar[n].q_derive(Y, ctx), shifted_trivar.scale(qn)))
            comparisons.append((f"D_z Q_{n}(x,y,z)", trivar[n].q_derive(Z, ctx), trivar[n - 1].scale(qn)))
            printed.append((f"D_x Q_{n}(x,y,z)", trivar[n].q_derive(X, ctx), (y_times * trivar[n - 1]).scale(qn)))
        report = VerificationReport.compare(
            f"quasi_derivatives[{family.label()}]",
            "D_{q,x} Q_n(x,y,z;u) = [n]_q y Q_(n-1)(ux,y,z;u) and the companion laws in y, z and for Q_n(x,y;u)",
            ctx, n_max, comparisons, notes=["x-derivative of the trivariate polynomial read at ux"],
        )
        report.record_printed_form("D_{q,x} Q_n(x,y,z;u) = [n]_q y Q_(n-1)(x,y,z;u)", printed)
        return report

    def relating_identity_check(self, family: AppellFamily, n_max: int) -> VerificationReport:
        """
        P_n(x;u) = u^C(n,2) Q_n(x, u^(1-n); u) and P_n(x,y;u) = Q_n(y,1,x;u).
        """
        ctx = family.ctx
        ctx.require_u_nonzero("relating identity")
        n_max = min(n_max, family.order)
        comparisons, printed_univariate, printed_bivariate = [], [], []
        for n in range(n_max + 1):
            univariate = self.appell_service.appell_poly(family, n)
            homog = self.quasi_homog(family, n)
            scale = ctx.u ** binom2(n)
            comparisons.append((f"univariate n={n}", univariate, homog.specialize(Y, ctx.u_power(1 - n)).scale(scale)))
            printed_univariate.append((f"n={n}", univariate, homog.specialize(Y, ctx.u_power(1 - 2 * n)).scale(scale)))

            bivariate = self.appell_service.appell_bivar(family, n)
            sliced = self.quasi_trivar(family, n).specialize(Y, 1)
            comparisons.append((f"bivariate n={n}", bivariate, sliced.rename(X, Y).rename(Z, X)))
            printed_bivariate.append((f"n={n}", bivariate, sliced.rename(Z, Y)))
        report = VerificationReport.compare(
            f"relating_identity[{family.label()}]",
            "P_n(x;u) = u^C(n,2) Q_n(x,u^(1-n);u); P_n(x,y;u) = Q_n(y,1,x;u)",
            ctx, n_max, comparisons,
            notes=["exponent of u in the second argument read as 1-n", "deformed variable of P_n(x,y;u) is y"],
        )
        report.record_printed_form("P_n(x;u) = u^C(n,2) Q_n(x,u^(1-2n);u)", printed_univariate)
        report.record_printed_form("P_n(x,y;u) = Q_n(x,1,y;u)", printed_bivariate)
        return report

    def quasi_genfun_check(self, family: AppellFamily, order: int) -> VerificationReport:
        """sum Q_n(x,y,z;u) t^n/[n]! = e_q(zt) A^alpha(yt) e_q(xyt,u)."""
        ctx = family.ctx
        order = min(order, family.order)
        rhs = (q_exp(MultiPoly.variable(Z), order, ctx)
               .mul(family.determining.truncate(order).dilate(MultiPoly.variable(Y)))
               .mul(deformed_exp(MultiPoly.variable(X) * MultiPoly.variable(Y), ctx.u, order, ctx)))
        comparisons = [(n, self.quasi_trivar(family, n), rhs.coeff(n)) for n in range(order + 1)]
        return VerificationReport.compare(
            f"quasi_generating_function[{family.label()}]",
            "sum Q_n(x,y,z;u) t^n/[n]! = e_q(zt) A^alpha(yt) e_q(xyt,u)",
            ctx, order, comparisons, notes=["e_q(xyts,u) read as e_q(xyt,u)"],
        )

    def quasi_weighted_genfun_check(self, family: AppellFamily, order: int) -> VerificationReport:
        """
        sum q^C(n,2) Q_n t^n/[n]! = E_q(zt) sum_k q^C(k,2) P_k(x;u) (ty)^k/((-(1-q)zt;q)_k [k]!).
        """
        ctx = family.ctx
        ctx.require_q_not_one("weighted quasi generating function")
        order = min(order, family.order)
        shift = MultiPoly.variable(Z).scale(ctx.q - 1)
        total = TruncSeries.zero(order, ctx)
        for k in range(order + 1):
            denominator = pochhammer_series(shift, k, order - k, ctx).inverse()
            weight = (self.appell_service.appell_poly(family, k) * MultiPoly.variable(Y, k)).scale(
                ctx.q ** binom2(k) / ctx.q_factorial(k))
            total = total + denominator.shift_up(k).scale(weight)
        rhs = big_q_exp(MultiPoly.variable(Z), order, ctx).mul(total)
        comparisons = [
            (n, self.quasi_trivar(family, n).scale(ctx.q ** binom2(n)), rhs.coeff(n)) for n in range(order + 1)
        ]
        return VerificationReport.compare(
            f"quasi_weighted_generating_function[{family.label()}]",
            "sum q^C(n,2) Q_n(x,y,z;u) t^n/[n]! = E_q(zt) sum q^C(k,2) P_k(x;u) (ty)^k/((-(1-q)zt;q)_k [k]!)",
            ctx, order, comparisons,
        )

    def eq_shift_check(self, k_max: int, order: int, ctx: QContext) -> VerificationReport:
        """
        E_q(q^k zt) = E_q(zt)/(-(1-q)zt;q)_k and e_q(q^k zt) = e_q(zt) ((1-q)zt;q)_k.
        """
        ctx.require_q_not_one("q-exponential shift law")
        z = MultiPoly.variable(Z)
        comparisons = []
        for k in range(k_max + 1):
            shifted_big = big_q_exp(z.scale(ctx.q ** k), order, ctx)
            big = big_q_exp(z, order, ctx).mul(pochhammer_series(z.scale(ctx.q - 1), k, order, ctx).inverse())
            shifted_small = q_exp(z.scale(ctx.q ** k), order, ctx)
            small = q_exp(z, order, ctx).mul(pochhammer_series(z.scale(1 - ctx.q), k, order, ctx))
            comparisons += [(f"E_q k={k} t^{n}", shifted_big.coeff(n), big.coeff(n)) for n in range(order + 1)]
            comparisons += [(f"e_q k={k} t^{n}", shifted_small.coeff(n), small.coeff(n)) for n in range(order + 1)]
        return VerificationReport.compare(
            "q_exponential_shift",
            "E_q(q^k zt) = E_q(zt)/(-(1-q)zt;q)_k; e_q(q^k zt) = e_q(zt) ((1-q)zt;q)_k",
            ctx, order, comparisons,
        )

    # Mehler and Rogers

    def mehler_lhs(self, first: AppellFamily, second: AppellFamily, order: int) -> TruncSeries:
        """sum_n Q_n^(alpha)(x,y,z;u) P_n^(beta)(w) t^n/[n]!, P^(beta)(w) classical."""
        def entry(n: int) -> MultiPoly:
            return self.quasi_trivar(first, n) * self.appell_service.classical_poly(second, n).rename(X, W)
        return TruncSeries.tabulate(order, first.ctx, entry)

    def mehler_rhs(self, first: AppellFamily, second: AppellFamily, order: int, reading: str = "proof") -> TruncSeries:
        """
        e_q(wzt) sum_(i+j<=N) (yt)^i (xyt)^j u^C(j,2)/([i]! [j]!)
            * A_i^alpha(ywt) A_(i+j)^beta(zt) ((1-q)wzt;q)_(i+j) e_q(q^i u^j c t, u)

        with c = xyw under the "proof" reading and c = ywz under "printed".
        Terms with i + j > N start beyond t^N and are dropped.
        """
        if reading not in MEHLER_READINGS:
            raise ValueError(f"Unknown Mehler reading '{reading}' (expected one of {', '.join(MEHLER_READINGS)})")
        ctx = first.ctx
        x, y, z, w = (MultiPoly.variable(v) for v in (X, Y, Z, W))
        exponential_base = x * y * w if reading == "proof" else y * w * z
        alpha_series = first.determining
        beta_series = second.determining
        total = TruncSeries.zero(order, ctx)
        for i in range(order + 1):
            for j in range(order + 1 - i):
                rest = order - i - j
                bracket = (alpha_series.shifted(i).truncate(rest).dilate(y * w)
                           .mul(beta_series.shifted(i + j).truncate(rest).dilate(z))
                           .mul(pochhammer_series(w * z.scale(1 - ctx.q), i + j, rest, ctx))
                           .mul(deformed_exp(exponential_base.scale(ctx.q ** i * ctx.u ** j), ctx.u, rest, ctx)))
                weight = (y ** i * (x * y) ** j).scale(ctx.u ** binom2(j) / (ctx.q_factorial(i) * ctx.q_factorial(j)))
                total = total + bracket.shift_up(i + j).scale(weight)
        return q_exp(w * z, order, ctx).mul(total)

    def mehler_verify(self, first: AppellFamily, second: AppellFamily, order: int,
                      reading: str = "proof") -> VerificationReport:
        """
        Bilinear generating function of Q_n^(alpha) P_n^(beta), compared
        coefficient-wise in x, y, z, w. The other reading is recorded as a
        printed-form discrepancy when it fails.
        """
        self._require_same_context(first, second)
        ctx = first.ctx
        ctx.require_q_not_one("Mehler formula")
        for family in (first, second):
            if family.is_degenerate:
                raise DegeneracyException(f"{family.label()} is degenerate; the Mehler formula needs a_0 != 0")
        order = min(order, first.order, second.order)
        logger.info(f"Mehler check {first.label()} x {second.label()} at {ctx.describe()} to order {order}")
        lhs = self.mehler_lhs(first, second, order)
        rhs = self.mehler_rhs(first, second, order, reading)
        notes = [
            f"final exponential read as e_q(q^i u^k {'xywt' if reading == 'proof' else 'ywzt'}, u)",
            "P^(beta)(w) taken as the undeformed polynomial",
            "shifted determining series built from the beta family",
        ]
        report = VerificationReport.compare(
            f"mehler[{first.label()},{second.label()}]",
            "sum Q_n^(alpha)(x,y,z;u) P_n^(beta)(w) t^n/[n]! = e_q(wzt) sum_i sum_k ... e_q(q^i u^k xywt,u)",
            ctx, order, [(n, lhs.coeff(n), rhs.coeff(n)) for n in range(order + 1)], notes,
        )
        if reading == "proof":
            printed = self.mehler_rhs(first, second, order, "printed")
            if not report.record_printed_form("final exponential e_q(q^i u^k ywzt,u)",
                                              [(n, lhs.coeff(n), printed.coeff(n)) for n in range(order + 1)]):
                logger.warning(f"Printed Mehler exponential fails at {ctx.describe()}")
        return report

    def mehler_inner_check(self, family: AppellFamily, k: int, order: int) -> VerificationReport:
        """
        sum_m (ywt)^m/[m]! P_(m+k)(x;u)
            = sum_i [k i]_q u^C(k-i,2) x^(k-i) A_i^alpha(ywt) e_q(q^i u^(k-i) xywt, u)
        compared to order N - k.
        """
        ctx = family.ctx
        order = min(order, family.order)
        if not 0 <= k <= order:
            raise IndexOutOfRangeException(f"Shift {k} outside order {order}")
        rest = order - k
        x, y, w = (MultiPoly.variable(v) for v in (X, Y, W))
        lhs = TruncSeries.tabulate(rest, ctx, lambda m: (y * w) ** m * self.appell_service.appell_poly(family, m + k))
        rhs = TruncSeries.zero(rest, ctx)
        for i in range(k + 1):
            term = (family.determining.shifted(i).truncate(rest).dilate(y * w)
                    .mul(deformed_exp((x * y * w).scale(ctx.q ** i * ctx.u ** (k - i)), ctx.u, rest, ctx)))
            rhs = rhs + term.scale(MultiPoly.monomial(ctx.q_binomial(k, i) * ctx.u ** binom2(k - i), x=k - i))
        return VerificationReport.compare(
            f"mehler_inner[{family.label()},k={k}]",
            "sum (ywt)^n/[n]! P_(n+k)(x;u) = sum_i [k i]_q u^C(k-i,2) x^(k-i) A_i^alpha(ywt) e_q(q^i u^(k-i) ywxt,u)",
            ctx, rest, [(m, lhs.coeff(m), rhs.coeff(m)) for m in range(rest + 1)],
        )

    def rogers_lhs(self, family: AppellFamily, order: int) -> BiTruncSeries:
        return BiTruncSeries.tabulate(order, family.ctx, lambda n, m: self.quasi_trivar(family, n + m))

    def rogers_rhs(self, family: AppellFamily, order: int) -> BiTruncSeries:
        """
        e_q(zt) e_q(zs) sum_n P_n(x;u) y^n/[n]! sum_k [n k]_q t^k s^(n-k) ((1-q)zs;q)_k
        on the triangle; t^k s^(n-k) [n k]/[n]! is the (k, n-k) divided-power unit.
        """
        ctx = family.ctx
        z = MultiPoly.variable(Z)
        total = BiTruncSeries.zero(order, ctx)
        for n in range(order + 1):
            weight = self.appell_service.appell_poly(family, n) * MultiPoly.variable(Y, n)
            for k in range(n + 1):
                s_part = _delta(n - k, order, ctx).mul(pochhammer_series(z.scale(1 - ctx.q), k, order, ctx))
                total = total + bi_outer(_delta(k, order, ctx), s_part).scale(weight)
        exponentials = bi_outer(q_exp(z, order, ctx), q_exp(z, order, ctx))
        return exponentials.mul(total)

    def rogers_verify(self, family: AppellFamily, order: int) -> VerificationReport:
        """Double generating function of Q_(n+m) on the (t, s) triangle."""
        ctx = family.ctx
        ctx.require_q_not_one("Rogers formula")
        order = min(order, family.order)
        logger.info(f"Rogers check {family.label()} at {ctx.describe()} to order {order}")
        lhs = self.rogers_lhs(family, order)
        rhs = self.rogers_rhs(family, order)
        return VerificationReport.compare(
            f"rogers[{family.label()}]",
            "sum sum Q_(n+m)(x,y,z;u) t^n/[n]! s^m/[m]! = e_q(zt) e_q(zs) sum P_n(x;u) y^n/[n]! sum [n k]_q t^k s^(n-k) ((1-q)zs;q)_k",
            ctx, order, [(list(index), lhs.coeff(*index), rhs.coeff(*index)) for index in lhs.indices()],
        )

    @staticmethod
    def _require_index(family: AppellFamily, n: int) -> None:
        if not 0 <= n <= family.order:
            raise IndexOutOfRangeException(f"Index {n} outside family {family.label()} of order {family.order}")

    @staticmethod
    def _require_same_context(first: AppellFamily, second: AppellFamily) -> None:
        if first.ctx.key != second.ctx.key:
            raise ContextMismatchException("Families were built over different (q, u)")
