"""
Truncated formal power series in t (and in the pair t, s).

Coefficients are stored in the q-divided-power normalization: entry n of a
TruncSeries is the coefficient of t^n/[n]_q!, entry (n, m) of a BiTruncSeries
the coefficient of t^n s^m/([n]_q! [m]_q!).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Tuple, Union

from qappell.domain.exceptions.domain_exceptions import (
    ContextMismatchException,
    IndexOutOfRangeException,
    NonScalarCoefficientsException,
    ZeroConstantTermException,
)
from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.qcontext import QContext, binom2

Coefficient = Union[MultiPoly, Fraction, int]

DEGREE_GUARD_FACTOR = 2


def _require_same_context(left: QContext, right: QContext) -> None:
    if left.key != right.key:
        raise ContextMismatchException(
            f"Context mismatch: (q={left.q}, u={left.u}) vs (q={right.q}, u={right.u})"
        )


@dataclass(frozen=True)
class TruncSeries:
    """Power series c_0 + c_1 t/[1]! + ... + c_N t^N/[N]! with MultiPoly coefficients."""
    order: int
    coeffs: Tuple[MultiPoly, ...]
    ctx: QContext

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"Series order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"Series of order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}")
        self.ctx.require_divided_powers(self.order, "Series in t^n/[n]_q!")

    # constructors

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Coefficient], ctx: QContext) -> "TruncSeries":
        polys = tuple(MultiPoly.coerce(c) for c in coeffs)
        return cls(len(polys) - 1, polys, ctx)

    @classmethod
    def tabulate(cls, order: int, ctx: QContext, entry: Callable[[int], Coefficient]) -> "TruncSeries":
        """Series whose n-th divided-power coefficient is entry(n)."""
        return cls.from_coeffs((entry(n) for n in range(order + 1)), ctx)

    @classmethod
    def zero(cls, order: int, ctx: QContext) -> "TruncSeries":
        return cls(order, (MultiPoly.zero(),) * (order + 1), ctx)

    @classmethod
    def one(cls, order: int, ctx: QContext) -> "TruncSeries":
        return cls.constant(1, order, ctx)

    @classmethod
    def constant(cls, value: Coefficient, order: int, ctx: QContext) -> "TruncSeries":
        return cls(order, (MultiPoly.coerce(value),) + (MultiPoly.zero(),) * order, ctx)

    @classmethod
    def from_ordinary(cls, coeffs: Sequence[Coefficient], order: int, ctx: QContext) -> "TruncSeries":
        """Series from ordinary coefficients of t^m (missing entries are zero)."""
        def entry(m: int) -> MultiPoly:
            if m >= len(coeffs):
                return MultiPoly.zero()
            return MultiPoly.coerce(coeffs[m]).scale(ctx.q_factorial(m))
        return cls.tabulate(order, ctx, entry)

    # inspection

    def coeff(self, n: int) -> MultiPoly:
        if not 0 <= n <= self.order:
            raise IndexOutOfRangeException(f"Coefficient {n} outside series of order {self.order}")
        return self.coeffs[n]

    def is_scalar(self) -> bool:
        return all(c.is_constant() for c in self.coeffs)

    def scalars(self) -> Tuple[Fraction, ...]:
        if not self.is_scalar():
            raise NonScalarCoefficientsException("Series has variables in its coefficients")
        return tuple(c.constant_term() for c in self.coeffs)

    def vanishing_order(self) -> int:
        """Index of the first nonzero coefficient; order + 1 for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1

    # structural operations

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise IndexOutOfRangeException(f"Cannot extend series of order {self.order} to {order}")
        return TruncSeries(order, self.coeffs[:order + 1], self.ctx)

    def map_coeffs(self, fn: Callable[[MultiPoly], MultiPoly]) -> "TruncSeries":
        return TruncSeries(self.order, tuple(fn(c) for c in self.coeffs), self.ctx)

    def scale(self, factor: Coefficient) -> "TruncSeries":
        factor = MultiPoly.coerce(factor)
        return self.map_coeffs(lambda c: c * factor)

    def dilate(self, factor: Coefficient) -> "TruncSeries":
        """S(t) -> S(factor * t): coefficient n picks up factor^n."""
        factor = MultiPoly.coerce(factor)
        powers = [MultiPoly.one()]
        for _ in range(self.order):
            powers.append(powers[-1] * factor)
        return TruncSeries(self.order, tuple(c * p for c, p in zip(self.coeffs, powers)), self.ctx)

    def shifted(self, k: int) -> "TruncSeries":
        """shifted_determining: the series sum_n c_(n+k) t^n/[n]_q!, of order N - k."""
        if not 0 <= k <= self.order:
            raise IndexOutOfRangeException(f"Shift {k} outside series of order {self.order}")
        return TruncSeries(self.order - k, self.coeffs[k:], self.ctx)

    def shift_up(self, k: int) -> "TruncSeries":
        """Multiply by t^k; the order rises by k."""
        if k < 0:
            raise ValueError(f"shift_up requires k >= 0, got {k}")
        coeffs = [MultiPoly.zero()] * k
        for m in range(k, self.order + k + 1):
            coeffs.append(self.coeffs[m - k].scale(self.ctx.q_falling(m, k)))
        return TruncSeries(self.order + k, tuple(coeffs), self.ctx)

    # arithmetic

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        _require_same_context(self.ctx, other.ctx)
        order = min(self.order, other.order)
        return TruncSeries(order, tuple(self.coeffs[n] + other.coeffs[n] for n in range(order + 1)), self.ctx)

    def __neg__(self) -> "TruncSeries":
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        return self.mul(other)

    def mul(self, other: "TruncSeries") -> "TruncSeries":
        """series_mul: coefficient n is sum_k [n k]_q A_k B_(n-k)."""
        _require_same_context(self.ctx, other.ctx)
        ctx = self.ctx
        order = min(self.order, other.order)
        coeffs = []
        for n in range(order + 1):
            total = MultiPoly.zero()
            for k in range(n + 1):
                left, right = self.coeffs[k], other.coeffs[n - k]
                if left and right:
                    total = total + (left * right).scale(ctx.q_binomial(n, k))
            total.check_degree_bound(DEGREE_GUARD_FACTOR * max(order, 1))
            coeffs.append(total)
        return TruncSeries(order, tuple(coeffs), ctx)

    def inverse(self) -> "TruncSeries":
        """series_inv by triangular recursion; needs a nonzero constant A_0."""
        head = self.coeffs[0]
        if not head:
            raise ZeroConstantTermException(
                "Series has zero constant term and cannot be inverted (degenerate determining function)"
            )
        if not head.is_constant():
            raise NonScalarCoefficientsException("Series inversion needs a scalar constant term")
        ctx = self.ctx
        head_inverse = 1 / head.constant_term()
        result = [MultiPoly.constant(head_inverse)]
        for n in range(1, self.order + 1):
            total = MultiPoly.zero()
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    total = total + (self.coeffs[k] * result[n - k]).scale(ctx.q_binomial(n, k))
            result.append(total.scale(-head_inverse))
        return TruncSeries(self.order, tuple(result), ctx)

    def ipow(self, alpha: int) -> "TruncSeries":
        """series_ipow: integer powers, negative ones through inversion."""
        if alpha < 0:
            return self.inverse().ipow(-alpha)
        result = TruncSeries.one(self.order, self.ctx)
        for _ in range(alpha):
            result = result.mul(self)
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.ctx.key == other.ctx.key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.ctx.key, self.coeffs))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}


def deformed_exp(c: Coefficient, u0: Fraction, order: int, ctx: QContext) -> TruncSeries:
    """e_q(c t, u0) = sum u0^C(n,2) c^n t^n/[n]_q!; u0 = 0 gives 1 + c t."""
    c = MultiPoly.coerce(c)
    u0 = Fraction(u0)
    coeffs = [MultiPoly.one()]
    power = MultiPoly.one()
    for n in range(1, order + 1):
        power = power * c
        coeffs.append(power.scale(u0 ** binom2(n)))
    return TruncSeries(order, tuple(coeffs), ctx)


def q_exp(c: Coefficient, order: int, ctx: QContext) -> TruncSeries:
    """e_q(c t)."""
    return deformed_exp(c, Fraction(1), order, ctx)


def big_q_exp(c: Coefficient, order: int, ctx: QContext) -> TruncSeries:
    """E_q(c t) = e_q(c t, q)."""
    return deformed_exp(c, ctx.q, order, ctx)


def pochhammer_series(c: Coefficient, k: int, order: int, ctx: QContext) -> TruncSeries:
    """(c t; q)_k = prod_{j<k} (1 - q^j c t) as a series in t."""
    c = MultiPoly.coerce(c)
    ordinary: List[MultiPoly] = [MultiPoly.one()]
    for j in range(k):
        factor = c.scale(-ctx.q_power(j))
        shifted = [MultiPoly.zero()] + [p * factor for p in ordinary]
        ordinary = [a + b for a, b in zip(ordinary + [MultiPoly.zero()], shifted)]
    return TruncSeries.from_ordinary(ordinary, order, ctx)


@dataclass(frozen=True)
class BiTruncSeries:
    """Double series in t, s on the triangle n + m <= N."""
    order: int
    coeffs: Dict[Tuple[int, int], MultiPoly]
    ctx: QContext

    def __post_init__(self):
        expected = {(n, m) for n in range(self.order + 1) for m in range(self.order + 1 - n)}
        if set(self.coeffs) != expected:
            raise ValueError(f"Bivariate series of order {self.order} must be indexed by the triangle n + m <= {self.order}")
        self.ctx.require_divided_powers(self.order, "Series in t^n s^m/([n]_q! [m]_q!)")

    @classmethod
    def tabulate(cls, order: int, ctx: QContext, entry: Callable[[int, int], Coefficient]) -> "BiTruncSeries":
        return cls(order, {
            (n, m): MultiPoly.coerce(entry(n, m))
            for n in range(order + 1) for m in range(order + 1 - n)
        }, ctx)

    @classmethod
    def zero(cls, order: int, ctx: QContext) -> "BiTruncSeries":
        return cls.tabulate(order, ctx, lambda n, m: MultiPoly.zero())

    @classmethod
    def one(cls, order: int, ctx: QContext) -> "BiTruncSeries":
        return cls.tabulate(order, ctx, lambda n, m: 1 if n == m == 0 else 0)

    def coeff(self, n: int, m: int) -> MultiPoly:
        if (n, m) not in self.coeffs:
            raise IndexOutOfRangeException(f"Index ({n}, {m}) outside the order-{self.order} triangle")
        return self.coeffs[(n, m)]

    def indices(self) -> List[Tuple[int, int]]:
        return sorted(self.coeffs)

    def __add__(self, other: "BiTruncSeries") -> "BiTruncSeries":
        _require_same_context(self.ctx, other.ctx)
        order = min(self.order, other.order)
        return BiTruncSeries.tabulate(order, self.ctx, lambda n, m: self.coeffs[(n, m)] + other.coeffs[(n, m)])

    def scale(self, factor: Coefficient) -> "BiTruncSeries":
        factor = MultiPoly.coerce(factor)
        return BiTruncSeries(self.order, {key: c * factor for key, c in self.coeffs.items()}, self.ctx)

    def mul(self, other: "BiTruncSeries") -> "BiTruncSeries":
        """bi_mul: convolution with [n k]_q [m j]_q weights on the triangle."""
        _require_same_context(self.ctx, other.ctx)
        ctx = self.ctx
        order = min(self.order, other.order)

        def entry(n: int, m: int) -> MultiPoly:
            total = MultiPoly.zero()
            for k in range(n + 1):
                for j in range(m + 1):
                    left, right = self.coeffs[(k, j)], other.coeffs[(n - k, m - j)]
                    if left and right:
                        weight = ctx.q_binomial(n, k) * ctx.q_binomial(m, j)
                        total = total + (left * right).scale(weight)
            return total

        return BiTruncSeries.tabulate(order, ctx, entry)

    def __mul__(self, other: "BiTruncSeries") -> "BiTruncSeries":
        return self.mul(other)

    def __eq__(self, other):
        if not isinstance(other, BiTruncSeries):
            return NotImplemented
        return self.order == other.order and self.ctx.key == other.ctx.key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.ctx.key, tuple(sorted(self.coeffs.items()))))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [{"index": [n, m], "poly": self.coeffs[(n, m)].to_json()} for n, m in self.indices()],
        }


def bi_outer(first: TruncSeries, second: TruncSeries) -> BiTruncSeries:
    """Place A_n * B_m at (n, m): the product A(t) B(s)."""
    _require_same_context(first.ctx, second.ctx)
    order = min(first.order, second.order)
    return BiTruncSeries.tabulate(order, first.ctx, lambda n, m: first.coeffs[n] * second.coeffs[m])


def describe_series(series: TruncSeries) -> str:
    """Compact one-line rendering, for log messages."""
    return ", ".join(str(c) for c in series.coeffs)
