"""
q-kernel service: checks of the q-arithmetic primitives, the Jackson
derivative and the series engine.
"""
import logging
import random
from fractions import Fraction

from qappell.domain.models.multipoly import MultiPoly, leibniz_rhs
from qappell.domain.models.qcontext import QContext, binom2
from qappell.domain.models.series import TruncSeries, deformed_exp, q_exp
from qappell.domain.models.verification_report import VerificationReport
from qappell.domain.value_objects.variable import Variable

logger = logging.getLogger(__name__)

X, Y, Z = Variable.X, Variable.Y, Variable.Z

KERNEL_MAX_N = 16
POCHHAMMER_BASES = (Fraction(1, 2), Fraction(3), Fraction(-2, 5))
IPOW_RANGE = range(-2, 4)


def quotient_derivative(p: MultiPoly, var: Variable, ctx: QContext) -> MultiPoly:
    """(p(var) - p(q var))/((1 - q) var), the defining quotient; needs q != 1."""
    ctx.require_q_not_one("quotient-form q-derivative")
    numerator = (p - p.subst_scale(var, ctx.q)).scale(1 / (1 - ctx.q))
    lowered = {}
    for exponent, coefficient in numerator.terms():
        moved = list(exponent)
        moved[var.index] -= 1
        lowered[tuple(moved)] = coefficient
    return MultiPoly(lowered)


def random_poly(rng: random.Random, degree: int, variables=(X, Y)) -> MultiPoly:
    """Dense random polynomial with small rational coefficients."""
    total = MultiPoly.zero()
    for _ in range(degree + 2):
        powers = {v.value: rng.randint(0, degree) for v in variables}
        coefficient = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        total = total + MultiPoly.monomial(coefficient, **powers)
    return total


def random_series(rng: random.Random, order: int, ctx: QContext) -> TruncSeries:
    """Scalar series with a nonzero constant term."""
    head = Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 3))
    return TruncSeries.from_coeffs(
        [head] + [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(order)], ctx)


class QCoreService:
    """
    Service for the q-kernel, Leibniz and series-engine checks.
    """

    def __init__(self, seed: int):
        """
        Initialize the service.

        Args:
            seed: Seed for the random polynomials and series
        """
        self.seed = seed

    def kernel_check(self, ctx: QContext, n_max: int = KERNEL_MAX_N) -> VerificationReport:
        """
        Symmetry and both Pascal recurrences of [n k]_q, its factorial quotient
        where no q-factorial vanishes, the Pochhammer product law, the
        quotient form of [n]_q and the C(n,2) addition law. Memoized values
        are compared against fresh ones.
        """
        fresh = QContext(ctx.q, ctx.u, memoize=False)
        comparisons = []
        for n in range(n_max + 1):
            if ctx.q != 1:
                comparisons.append((f"[{n}] quotient", ctx.q_number(n), (1 - ctx.q ** n) / (1 - ctx.q)))
            comparisons.append((f"[{n}]! memo", ctx.q_factorial(n), fresh.q_factorial(n)))
            invertible = ctx.factorials_invertible(n)
            for k in range(n + 1):
                comparisons.append((f"[{n} {k}] symmetry", ctx.q_binomial(n, k), ctx.q_binomial(n, n - k)))
                comparisons.append((f"[{n} {k}] memo", ctx.q_binomial(n, k), fresh.q_binomial(n, k)))
                if n and k:
                    pascal = ctx.q_binomial(n - 1, k - 1) + ctx.q ** k * ctx.q_binomial(n - 1, k)
                    comparisons.append((f"[{n} {k}] pascal", ctx.q_binomial(n, k), pascal))
                    mirrored = ctx.q ** (n - k) * ctx.q_binomial(n - 1, k - 1) + ctx.q_binomial(n - 1, k)
                    comparisons.append((f"[{n} {k}] mirrored pascal", ctx.q_binomial(n, k), mirrored))
                if invertible:
                    quotient = ctx.q_factorial(n) / (ctx.q_factorial(k) * ctx.q_factorial(n - k))
                    comparisons.append((f"[{n} {k}] factorial quotient", ctx.q_binomial(n, k), quotient))
                comparisons.append((f"C({n}+{k},2)", binom2(n + k), binom2(n) + binom2(k) + n * k))
            for a0 in POCHHAMMER_BASES:
                comparisons.append((
                    f"({a0};q)_{n + 1}", ctx.q_pochhammer(a0, n) * (1 - ctx.q ** n * a0), ctx.q_pochhammer(a0, n + 1)))
        return VerificationReport.compare(
            "q_kernel", "[n k]_q = [n n-k]_q; [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q; (a;q)_n (1 - q^n a) = (a;q)_(n+1)",
            ctx, n_max, comparisons,
        )

    def derivative_kernel_check(self, ctx: QContext, degree_max: int = 12) -> VerificationReport:
        """
        D_q on monomials: the quotient form (q != 1) or the formal derivative
        (q = 1), linearity, and D_q^k against k nested applications.
        """
        rng = random.Random(self.seed)
        comparisons = []
        for d in range(degree_max + 1):
            monomial = MultiPoly.monomial(1, x=d, y=1)
            derived = monomial.q_derive(X, ctx)
            if ctx.q == 1:
                comparisons.append((f"d/dx x^{d}y", derived, MultiPoly.monomial(d, x=d - 1, y=1) if d else MultiPoly.zero()))
            else:
                comparisons.append((f"quotient x^{d}y", derived, quotient_derivative(monomial, X, ctx)))
        for trial in range(5):
            f, g = random_poly(rng, 5), random_poly(rng, 5)
            alpha, beta = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(1, 7), 2)
            comparisons.append((
                f"linearity #{trial}", (f.scale(alpha) + g.scale(beta)).q_derive(X, ctx),
                f.q_derive(X, ctx).scale(alpha) + g.q_derive(X, ctx).scale(beta)))
            nested = f
            for k in range(1, 5):
                nested = nested.q_derive(X, ctx)
                comparisons.append((f"D^{k} #{trial}", f.q_derive_k(X, k, ctx), nested))
        report = VerificationReport.compare(
            "q_derivative", "D_q x^k = [k]_q x^(k-1); D_q^n x^k = [k]_q!/[k-n]_q! x^(k-n)", ctx, degree_max, comparisons)
        if ctx.q != 1 and ctx.factorials_invertible(5):
            printed = []
            for k in range(1, 7):
                for n in range(1, k + 1):
                    ratio = ctx.q_pochhammer(ctx.q, k) / ctx.q_pochhammer(ctx.q, k - n)
                    printed.append((f"n={n} k={k}", MultiPoly.variable(X, k).q_derive_k(X, n, ctx),
                                    MultiPoly.variable(X, k - n).scale(ratio)))
            report.record_printed_form("D_q^n x^k = (q;q)_k/(q;q)_(k-n) x^(k-n)", printed)
        return report

    def leibniz_check(self, ctx: QContext, pairs: int, degree: int = 5, n_max: int = 4) -> VerificationReport:
        """q-Leibniz rule on random polynomial pairs."""
        rng = random.Random(self.seed)
        comparisons = []
        for trial in range(pairs):
            f, g = random_poly(rng, degree), random_poly(rng, degree)
            product = f * g
            for n in range(n_max + 1):
                comparisons.append((f"pair {trial} n={n}", product.q_derive_k(X, n, ctx), leibniz_rhs(f, g, X, n, ctx)))
        return VerificationReport.compare(
            "q_leibniz",
            "D_q^n (fg) = sum_k q^(k(k-n)) [n k]_q D_q^k f D_q^(n-k) {g(q^k x)}",
            ctx, n_max, comparisons,
        )

    def series_check(self, ctx: QContext, order: int = 8) -> VerificationReport:
        """
        Product laws, double inversion, integer-power additivity and the
        coefficients of the deformed exponential and its specializations.
        """
        rng = random.Random(self.seed)
        z = MultiPoly.variable(Z)
        comparisons = []
        a, b, c = (random_series(rng, order, ctx) for _ in range(3))
        for n in range(order + 1):
            comparisons.append((f"commutative t^{n}", a.mul(b).coeff(n), b.mul(a).coeff(n)))
            comparisons.append((f"associative t^{n}", a.mul(b.mul(c)).coeff(n), a.mul(b).mul(c).coeff(n)))
            comparisons.append((f"inv inv t^{n}", a.inverse().inverse().coeff(n), a.coeff(n)))
            comparisons.append((f"inv * self t^{n}", a.inverse().mul(a).coeff(n), MultiPoly.constant(1 if n == 0 else 0)))
        exponential = q_exp(1, order, ctx)
        for alpha in IPOW_RANGE:
            for beta in IPOW_RANGE:
                left = exponential.ipow(alpha + beta)
                right = exponential.ipow(alpha).mul(exponential.ipow(beta))
                comparisons += [(f"ipow {alpha}+{beta} t^{n}", left.coeff(n), right.coeff(n)) for n in range(order + 1)]
        deformed = deformed_exp(z, ctx.u, order, ctx)
        comparisons += [
            (f"e_q(zt,u) t^{n}", deformed.coeff(n), (z ** n).scale(ctx.u ** binom2(n))) for n in range(order + 1)
        ]
        ramanujan_order = max(order, 10)
        ramanujan = deformed_exp(z.scale(ctx.q), ctx.q ** 2, ramanujan_order, ctx)
        comparisons += [
            (f"R_q t^{n}", ramanujan.coeff(n), (z ** n).scale(ctx.q ** (n * n))) for n in range(ramanujan_order + 1)
        ]
        notes = []
        if ctx.u * ctx.u == ctx.q and ctx.u >= 0:
            notes.append("u = sqrt(q): Exton exponential")
            comparisons += [
                (f"Exton t^{n}", deformed.coeff(n) * deformed.coeff(n), (z ** (2 * n)).scale(ctx.q ** binom2(n)))
                for n in range(order + 1)
            ]
        return VerificationReport.compare(
            "series_engine", "A B = B A; (A^-1)^-1 = A; A^(a+b) = A^a A^b; e_q(z,u) = sum u^C(n,2) z^n/[n]!",
            ctx, order, comparisons, notes,
        )
