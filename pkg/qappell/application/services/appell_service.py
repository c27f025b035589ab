"""
Appell service: deformed q-Appell polynomials and their structure identities.
"""
import logging
from fractions import Fraction
from typing import List, Optional

from qappell.domain.exceptions.domain_exceptions import (
    ContextMismatchException,
    DegeneracyException,
    IndexOutOfRangeException,
)
from qappell.domain.models.appell_family import AppellFamily
from qappell.domain.models.multipoly import MultiPoly, pochhammer_poly
from qappell.domain.models.qcontext import QContext, binom2
from qappell.domain.models.series import deformed_exp, q_exp
from qappell.domain.models.verification_report import VerificationReport
from qappell.domain.value_objects.variable import Variable
from qappell.infrastructure.cache.memo_table import MemoTable

logger = logging.getLogger(__name__)

X, Y, A = Variable.X, Variable.Y, Variable.A

BIVAR_ROUTES = ("iden21", "iden22", "rconv")

# printed display of A_3(a;u); the recursion disagrees with it
PRINTED_A3 = "1 - [3]_q u^-2 a - q [3]_q u^-2 a^2 (1 - a) - [3]_q u^-2 a^3"


class AppellService:
    """
    Service for deformed q-Appell families: closed forms, bivariate routes,
    the A_n(a;u) sequence and the characterization checks.
    """

    def __init__(self, memo: Optional[MemoTable] = None):
        """
        Initialize the service.

        Args:
            memo: Table for R_n and A_n(a;u), keyed by (q, u) and index
        """
        self.memo = memo if memo is not None else MemoTable()

    # polynomials

    def appell_poly(self, family: AppellFamily, n: int, u: Optional[Fraction] = None) -> MultiPoly:
        """
        P_n(x;u) = sum_k [n k]_q u^C(n-k,2) a_k x^(n-k).

        Args:
            family: Appell family
            n: Index, at most the family order
            u: Deformation override; u = 1 gives the classical polynomial

        Returns:
            Polynomial in x
        """
        self._require_index(family, n)
        ctx = family.ctx
        u = ctx.u if u is None else Fraction(u)
        total = MultiPoly.zero()
        for k in range(n + 1):
            coefficient = ctx.q_binomial(n, k) * u ** binom2(n - k) * family.a(k)
            if coefficient:
                total = total + MultiPoly.monomial(coefficient, x=n - k)
        return total

    def classical_poly(self, family: AppellFamily, n: int) -> MultiPoly:
        """The undeformed polynomial P_n(x), generated by A^alpha e_q(xt)."""
        return self.appell_poly(family, n, Fraction(1))

    def homog_R(self, n: int, ctx: QContext) -> MultiPoly:
        """R_n(x,y;u|q) = sum_k [n k]_q u^C(n-k,2) x^k y^(n-k)."""
        def build() -> MultiPoly:
            total = MultiPoly.zero()
            for k in range(n + 1):
                coefficient = ctx.q_binomial(n, k) * ctx.u ** binom2(n - k)
                total = total + MultiPoly.monomial(coefficient, x=k, y=n - k)
            return total
        return self.memo.get_or_compute(("R", ctx.key, n), build)

    def appell_bivar(self, family: AppellFamily, n: int, route: str = "rconv") -> MultiPoly:
        """
        Bivariate P_n(x,y;u), generated by A^alpha e_q(xt) e_q(yt,u).

        Routes:
            iden21: sum_k [n k]_q u^C(n-k,2) P_k(x) y^(n-k), classical P_k
            iden22: sum_k [n k]_q P_k(y;u) x^(n-k)
            rconv:  sum_k [n k]_q a_k R_(n-k)(x,y;u|q)
        """
        self._require_index(family, n)
        ctx = family.ctx
        total = MultiPoly.zero()
        if route == "iden21":
            for k in range(n + 1):
                weight = ctx.q_binomial(n, k) * ctx.u ** binom2(n - k)
                total = total + (self.classical_poly(family, k) * MultiPoly.variable(Y, n - k)).scale(weight)
        elif route == "iden22":
            for k in range(n + 1):
                deformed = self.appell_poly(family, k).rename(X, Y)
                total = total + (deformed * MultiPoly.variable(X, n - k)).scale(ctx.q_binomial(n, k))
        elif route == "rconv":
            for k in range(n + 1):
                if family.a(k):
                    total = total + self.homog_R(n - k, ctx).scale(ctx.q_binomial(n, k) * family.a(k))
        else:
            raise ValueError(f"Unknown bivariate route '{route}' (expected one of {', '.join(BIVAR_ROUTES)})")
        return total

    # the A_n(a;u) sequence

    def a_sequence(self, n: int, ctx: QContext) -> MultiPoly:
        """
        A_n(a;u) from sum_k [n k]_q u^(k(k-n)) a^k A_(n-k)(a;u) = 1 with A_0 = 1.

        The generating function is e_q(yt,u)/e_q(ayt,u) with y^n t^n/[n]_q!
        carrying u^C(n,2) A_n(a;u).
        """
        if n < 0:
            raise IndexOutOfRangeException(f"A-sequence index must be >= 0, got {n}")
        ctx.require_u_nonzero("A_n(a;u)")

        def build() -> MultiPoly:
            if n == 0:
                return MultiPoly.one()
            total = MultiPoly.one()
            for k in range(1, n + 1):
                weight = ctx.q_binomial(n, k) * ctx.u_power(k * (k - n))
                total = total - (MultiPoly.variable(A, k) * self.a_sequence(n - k, ctx)).scale(weight)
            return total

        return self.memo.get_or_compute(("A", ctx.key, n), build)

    def printed_a3(self, ctx: QContext) -> MultiPoly:
        """The printed n = 3 display, kept for comparison with the recursion."""
        ctx.require_u_nonzero("A_3(a;u)")
        a = MultiPoly.variable(A)
        head = ctx.q_number(3) * ctx.u_power(-2)
        return (MultiPoly.one() - a.scale(head)
                - (a * a * (MultiPoly.one() - a)).scale(ctx.q * head)
                - (a ** 3).scale(head))

    def reproduce_via_a_sequence(self, family: AppellFamily, n: int, a0: Fraction) -> MultiPoly:
        """
        sum_k [n k]_q u^C(k,2) A_k(a0;u) y^k P_(n-k)(x, a0 y; u).

        The inner polynomial carries a0*y, matching the factorization
        A^alpha e_q(xt) e_q(yt,u) = [e_q(yt,u)/e_q(a0 yt,u)] A^alpha e_q(xt) e_q(a0 yt,u).
        """
        self._require_index(family, n)
        ctx = family.ctx
        ctx.require_u_nonzero("A-sequence expansion")
        a0 = Fraction(a0)
        total = MultiPoly.zero()
        for k in range(n + 1):
            value = self.a_sequence(k, ctx).evaluate({A: a0})
            if not value:
                continue
            inner = self.appell_bivar(family, n - k).subst_scale(Y, a0)
            weight = ctx.q_binomial(n, k) * ctx.u ** binom2(k) * value
            total = total + (inner * MultiPoly.variable(Y, k)).scale(weight)
        return total

    def addition_convolve(self, first: AppellFamily, second: AppellFamily, n: int) -> MultiPoly:
        """sum_k [n k]_q P_k^(alpha)(x) P_(n-k)^(beta)(y;u), with P^(alpha)(x) classical."""
        if first.ctx.key != second.ctx.key:
            raise ContextMismatchException("Addition theorem operands were built over different (q, u)")
        ctx = first.ctx
        total = MultiPoly.zero()
        for k in range(n + 1):
            right = self.appell_poly(second, n - k).rename(X, Y)
            total = total + (self.classical_poly(first, k) * right).scale(ctx.q_binomial(n, k))
        return total

    # verification

    def bivariate_routes_check(self, family: AppellFamily, n_max: int) -> VerificationReport:
        """The three bivariate routes agree, and P_n(0,y;u) = P_n(y;u)."""
        n_max = min(n_max, family.order)
        comparisons = []
        for n in range(n_max + 1):
            reference = self.appell_bivar(family, n, "rconv")
            comparisons.append((f"iden21 n={n}", self.appell_bivar(family, n, "iden21"), reference))
            comparisons.append((f"iden22 n={n}", self.appell_bivar(family, n, "iden22"), reference))
            comparisons.append((f"x=0 n={n}", reference.specialize(X, 0), self.appell_poly(family, n).rename(X, Y)))
        return VerificationReport.compare(
            f"bivariate_routes[{family.label()}]",
            "P_n(x,y;u) = sum [n k] u^C(n-k,2) P_k(x) y^(n-k) = sum [n k] P_k(y;u) x^(n-k) = sum [n k] a_k R_(n-k)(x,y;u|q)",
            family.ctx, n_max, comparisons,
        )

    def generating_function_check(self, family: AppellFamily, order: int) -> VerificationReport:
        """
        Coefficients of A^alpha e_q(xt,u) and A^alpha e_q(xt) e_q(yt,u) equal
        the closed-form sums.
        """
        ctx = family.ctx
        order = min(order, family.order)
        determining = family.determining.truncate(order)
        univariate = determining.mul(deformed_exp(MultiPoly.variable(X), ctx.u, order, ctx))
        bivariate = determining.mul(q_exp(MultiPoly.variable(X), order, ctx)).mul(
            deformed_exp(MultiPoly.variable(Y), ctx.u, order, ctx))
        comparisons = []
        for n in range(order + 1):
            comparisons.append((f"univariate n={n}", univariate.coeff(n), self.appell_poly(family, n)))
            comparisons.append((f"bivariate n={n}", bivariate.coeff(n), self.appell_bivar(family, n)))
        return VerificationReport.compare(
            f"generating_function[{family.label()}]",
            "A^alpha(t) e_q(xt,u) = sum P_n(x;u) t^n/[n]!; A^alpha(t) e_q(xt) e_q(yt,u) = sum P_n(x,y;u) t^n/[n]!",
            ctx, order, comparisons,
        )

    def derivative_checks(self, family: AppellFamily, n_max: int) -> List[VerificationReport]:
        """
        q-derivative laws of the bivariate polynomials, their k-fold iterates,
        and the univariate recursion D_q P_n(x;u) = [n]_q P_(n-1)(ux;u).
        """
        ctx = family.ctx
        n_max = min(n_max, family.order)
        bivar = [self.appell_bivar(family, n) for n in range(n_max + 1)]
        univar = [self.appell_poly(family, n) for n in range(n_max + 1)]

        dx, dy, dxk, dyk, recursion = [], [], [], [], []
        for n in range(1, n_max + 1):
            dx.append((n, bivar[n].q_derive(X, ctx), bivar[n - 1].scale(ctx.q_number(n))))
            dy.append((n, bivar[n].q_derive(Y, ctx), bivar[n - 1].subst_scale(Y, ctx.u).scale(ctx.q_number(n))))
            recursion.append((n, univar[n].q_derive(X, ctx), univar[n - 1].subst_scale(X, ctx.u).scale(ctx.q_number(n))))
            for k in range(2, n + 1):
                falling = ctx.q_falling(n, k)
                dxk.append((f"n={n} k={k}", bivar[n].q_derive_k(X, k, ctx), bivar[n - k].scale(falling)))
                expected = bivar[n - k].subst_scale(Y, ctx.u ** k).scale(falling * ctx.u ** binom2(k))
                dyk.append((f"n={n} k={k}", bivar[n].q_derive_k(Y, k, ctx), expected))

        if ctx.u == 1:
            recursion_name, recursion_anchor = "appell_recursion_type_I", "D_q P_n(x) = [n]_q P_(n-1)(x)"
        elif ctx.u == ctx.q:
            recursion_name, recursion_anchor = "appell_recursion_type_II", "D_q P_n(x) = [n]_q P_(n-1)(qx)"
        else:
            recursion_name, recursion_anchor = "deformed_appell_recursion", "D_q P_n(x;u) = [n]_q P_(n-1)(ux;u)"

        label = family.label()
        return [
            VerificationReport.compare(f"bivariate_dx[{label}]", "D_{q,x} P_n(x,y;u) = [n]_q P_(n-1)(x,y;u)", ctx, n_max, dx),
            VerificationReport.compare(f"bivariate_dy[{label}]", "D_{q,y} P_n(x,y;u) = [n]_q P_(n-1)(x,uy;u)", ctx, n_max, dy),
            VerificationReport.compare(
                f"iterated_dx[{label}]", "D_{q,x}^k P_n(x,y;u) = [n]!/[n-k]! P_(n-k)(x,y;u)", ctx, n_max, dxk),
            VerificationReport.compare(
                f"iterated_dy[{label}]", "D_{q,y}^k P_n(x,y;u) = [n]!/[n-k]! u^C(k,2) P_(n-k)(x,u^k y;u)", ctx, n_max, dyk,
                notes=["x-direction iterate carries no power of u"]),
            VerificationReport.compare(f"{recursion_name}[{label}]", recursion_anchor, ctx, n_max, recursion),
        ]

    def characterization_check(self, family: AppellFamily, n_max: int) -> VerificationReport:
        """
        Four equivalent descriptions of a deformed q-Appell family agree:
        the recursion, the explicit sum, generating-function extraction and
        the operator form sum_k u^C(n-k,2) a_k D_q^k/[k]! applied to x^n.
        """
        if family.is_degenerate:
            raise DegeneracyException(f"{family.label()} vanishes at t = 0; the characterization needs a_0 != 0")
        ctx = family.ctx
        n_max = min(n_max, family.order)
        generating = family.determining.truncate(n_max).mul(deformed_exp(MultiPoly.variable(X), ctx.u, n_max, ctx))
        comparisons = []
        explicit = []
        for n in range(n_max + 1):
            polynomial = self.appell_poly(family, n)
            explicit.append(polynomial)
            comparisons.append((f"(iii) n={n}", generating.coeff(n), polynomial))
            monomial = MultiPoly.variable(X, n)
            operator_image = MultiPoly.zero()
            for k in range(n + 1):
                weight = ctx.u ** binom2(n - k) * family.a(k) / ctx.q_factorial(k)
                operator_image = operator_image + monomial.q_derive_k(X, k, ctx).scale(weight)
            comparisons.append((f"(iv) n={n}", operator_image, polynomial))
            if n:
                comparisons.append((
                    f"(i) n={n}", polynomial.q_derive(X, ctx),
                    explicit[n - 1].subst_scale(X, ctx.u).scale(ctx.q_number(n)),
                ))
        return VerificationReport.compare(
            f"characterization[{family.label()}]",
            "D_q P_n(x;u) = [n]_q P_(n-1)(ux;u) <=> explicit sum <=> A(t) e_q(xt,u) <=> operator form",
            ctx, n_max, comparisons,
            notes=["generating function uses the deformed exponential e_q(xt,u)"],
        )

    def a_sequence_checks(self, n_max: int, ctx: QContext) -> VerificationReport:
        """
        The recursion against the printed values for n <= 2, the closed forms
        (a;q)_n at u = 1 and (a;q^-1)_n at u = q, and the printed n = 3 line.
        """
        a = MultiPoly.variable(A)
        printed_a2 = (MultiPoly.one() - (a * (MultiPoly.one() - a)).scale(ctx.q_number(2) * ctx.u_power(-1)) - a * a)
        comparisons = [
            ("n=0", self.a_sequence(0, ctx), MultiPoly.one()),
            ("n=1", self.a_sequence(1, ctx), MultiPoly.one() - a),
            ("n=2", self.a_sequence(2, ctx), printed_a2),
        ]
        notes = []
        if ctx.u == 1:
            notes.append("u = 1: A_n(a;1) = (a;q)_n")
            comparisons += [(f"(a;q)_{n}", self.a_sequence(n, ctx), pochhammer_poly(A, ctx.q, n)) for n in range(n_max + 1)]
        if ctx.u == ctx.q and ctx.q != 0:
            notes.append("u = q: A_n(a;q) = (a;q^-1)_n")
            comparisons += [
                (f"(a;1/q)_{n}", self.a_sequence(n, ctx), pochhammer_poly(A, 1 / ctx.q, n)) for n in range(n_max + 1)
            ]
        report = VerificationReport.compare(
            "a_sequence", "sum_k [n k]_q u^(k(k-n)) a^k A_(n-k)(a;u) = 1", ctx, n_max, comparisons, notes)
        if not report.record_printed_form(f"A_3(a;u) = {PRINTED_A3}", [("n=3", self.printed_a3(ctx), self.a_sequence(3, ctx))]):
            logger.warning(f"Printed A_3(a;u) disagrees with the recursion at {ctx.describe()}")
        return report

    def reproduce_check(self, family: AppellFamily, n_max: int, a_values=(0, 1, Fraction(1, 2))) -> VerificationReport:
        """P_n(x,y;u) = sum_k [n k]_q u^C(k,2) A_k(a;u) y^k P_(n-k)(x, a y; u)."""
        ctx = family.ctx
        n_max = min(n_max, family.order)
        comparisons = [
            (f"a={a0} n={n}", self.reproduce_via_a_sequence(family, n, Fraction(a0)), self.appell_bivar(family, n))
            for a0 in a_values for n in range(n_max + 1)
        ]
        report = VerificationReport.compare(
            f"a_sequence_expansion[{family.label()}]",
            "P_n(x,y;u) = sum_k [n k]_q u^C(k,2) A_k(a;u) y^k P_(n-k)(x,ay;u)",
            ctx, n_max, comparisons, notes=["inner polynomial read as P_(n-k)(x, a y; u)"],
        )
        printed = [
            (f"a=0 n={n}", self._reproduce_printed(family, n), self.appell_bivar(family, n)) for n in range(n_max + 1)
        ]
        report.record_printed_form("inner polynomial P_(n-k)(x,y;u)", printed)
        return report

    def _reproduce_printed(self, family: AppellFamily, n: int) -> MultiPoly:
        # a = 0, so A_k = 1 and the printed inner polynomial is P_(n-k)(x,y;u)
        ctx = family.ctx
        total = MultiPoly.zero()
        for k in range(n + 1):
            weight = ctx.q_binomial(n, k) * ctx.u ** binom2(k)
            total = total + (self.appell_bivar(family, n - k) * MultiPoly.variable(Y, k)).scale(weight)
        return total

    def addition_check(self, first: AppellFamily, second: AppellFamily, combined: AppellFamily,
                       n_max: int) -> VerificationReport:
        """
        sum_k [n k]_q P_k^(alpha)(x) P_(n-k)^(beta)(y;u) = P_n^(alpha+beta)(x,y;u),
        where `combined` is the family of the product of determining functions.
        """
        n_max = min(n_max, first.order, second.order, combined.order)
        comparisons = [
            (n, self.addition_convolve(first, second, n), self.appell_bivar(combined, n)) for n in range(n_max + 1)
        ]
        return VerificationReport.compare(
            f"addition[{first.label()}+{second.label()}]",
            "P_n^(alpha+beta)(x,y;u) = sum [n k]_q P_k^(alpha)(x) P_(n-k)^(beta)(y;u)",
            first.ctx, n_max, comparisons, notes=["P^(beta)(y;v) read with v = u"],
        )

    def inverse_convolution_check(self, family: AppellFamily, inverse: AppellFamily, n_max: int) -> VerificationReport:
        """sum_k [n k]_q P_k^(alpha)(x) P_(n-k)^(-alpha)(y;u) = R_n(x,y;u|q)."""
        n_max = min(n_max, family.order, inverse.order)
        comparisons = [
            (n, self.addition_convolve(family, inverse, n), self.homog_R(n, family.ctx)) for n in range(n_max + 1)
        ]
        return VerificationReport.compare(
            f"inverse_convolution[{family.label()}]",
            "R_n(x,y;u|q) = sum [n k]_q P_k^(alpha)(x) P_(n-k)^(-alpha)(y;u)",
            family.ctx, n_max, comparisons,
        )

    @staticmethod
    def _require_index(family: AppellFamily, n: int) -> None:
        if not 0 <= n <= family.order:
            raise IndexOutOfRangeException(f"Index {n} outside family {family.label()} of order {family.order}")
