"""
QContext: the (q, u) parameter pair and the q-arithmetic primitives.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from qappell.domain.exceptions.domain_exceptions import (
    DeformationZeroException,
    QIsOneException,
    UnsupportedParameterException,
)
from qappell.domain.value_objects.rational import RationalLike, format_rational, parse_rational
from qappell.infrastructure.cache.memo_table import MemoTable


def binom2(n: int) -> int:
    """C(n, 2) = n(n-1)/2, defined for every integer n."""
    return n * (n - 1) // 2


@dataclass(frozen=True)
class QContext:
    """
    Rational parameters q and u with per-context memo tables.

    Two contexts are equal when their (q, u) pairs are equal; the memo table
    takes no part in comparison. Memoized values are identical to a fresh
    recomputation, so a context may be shared across threads.
    """
    q: Fraction
    u: Fraction
    memoize: bool = True
    _memo: MemoTable = field(default_factory=MemoTable, compare=False, repr=False)

    def __post_init__(self):
        """Validate parameters."""
        object.__setattr__(self, "q", parse_rational(self.q))
        object.__setattr__(self, "u", parse_rational(self.u))

    @classmethod
    def of(cls, q: RationalLike, u: RationalLike, memoize: bool = True) -> "QContext":
        """Build a context from rational literals."""
        return cls(parse_rational(q), parse_rational(u), memoize)

    def with_u(self, u: RationalLike) -> "QContext":
        """Same q, different deformation parameter."""
        return QContext(self.q, parse_rational(u), self.memoize)

    @property
    def key(self) -> tuple:
        """Hashable identity of the context."""
        return (self.q, self.u)

    def describe(self) -> Dict[str, str]:
        """Serialized parameters."""
        return {"q": format_rational(self.q), "u": format_rational(self.u)}

    def _memoized(self, key: tuple, factory):
        if not self.memoize:
            return factory()
        return self._memo.get_or_compute(key, factory)

    # q-numbers

    def q_number(self, n: int) -> Fraction:
        """[n]_q as the power sum 1 + q + ... + q^(n-1); valid at q = 1."""
        if n < 0:
            raise ValueError(f"q_number requires n >= 0, got {n}")
        return self._memoized(("num", n), lambda: sum((self.q ** i for i in range(n)), Fraction(0)))

    def q_factorial(self, n: int) -> Fraction:
        """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
        if n < 0:
            raise ValueError(f"q_factorial requires n >= 0, got {n}")
        if n == 0:
            return Fraction(1)
        return self._memoized(("fact", n), lambda: self.q_factorial(n - 1) * self.q_number(n))

    def q_falling(self, n: int, k: int) -> Fraction:
        """[n]_q!/[n-k]_q! as a product; zero when k > n."""
        if k < 0:
            raise ValueError(f"q_falling requires k >= 0, got {k}")
        if k > n:
            return Fraction(0)
        result = Fraction(1)
        for i in range(k):
            result *= self.q_number(n - i)
        return result

    def q_binomial(self, n: int, k: int) -> Fraction:
        """
        Gaussian binomial [n k]_q; zero outside 0 <= k <= n.

        Built by the recurrence [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, so no
        q-factorial is ever a divisor and q = -1 is legal.
        """
        if k < 0 or n < 0 or k > n:
            return Fraction(0)
        return self._binomial_row(n)[k]

    def _binomial_row(self, n: int) -> Tuple[Fraction, ...]:
        def build() -> Tuple[Fraction, ...]:
            row = [Fraction(1)]
            for m in range(1, n + 1):
                row = [
                    (row[k - 1] if k else 0) + (self.q ** k * row[k] if k < m else 0)
                    for k in range(m + 1)
                ]
            return tuple(row)
        return self._memoized(("binom_row", n), build)

    def q_pochhammer(self, a0: RationalLike, n: int, base: Optional[RationalLike] = None) -> Fraction:
        """(a0; base)_n = prod_{k<n} (1 - base^k a0); base defaults to q."""
        if n < 0:
            raise ValueError(f"q_pochhammer requires n >= 0, got {n}")
        a0 = parse_rational(a0)
        base = self.q if base is None else parse_rational(base)
        result = Fraction(1)
        for k in range(n):
            result *= 1 - base ** k * a0
        return result

    # powers of the parameters

    def q_power(self, exponent: int) -> Fraction:
        """q^e for any integer e (negative exponents need q != 0)."""
        if exponent < 0 and self.q == 0:
            raise UnsupportedParameterException(f"q^{exponent} is undefined at q = 0")
        return self.q ** exponent

    def u_power(self, exponent: int) -> Fraction:
        """u^e for any integer e; u^0 = 1 even at u = 0."""
        if exponent < 0 and self.u == 0:
            raise DeformationZeroException(f"u^{exponent} is undefined at u = 0")
        return self.u ** exponent

    # guards

    def require_q_not_one(self, operation: str) -> None:
        """Reject q = 1 for operations that divide by (1 - q)."""
        if self.q == 1:
            raise QIsOneException(f"{operation} requires q != 1")

    def require_u_nonzero(self, operation: str) -> None:
        """Reject u = 0 for operations that divide by u."""
        if self.u == 0:
            raise DeformationZeroException(f"{operation} requires u != 0")

    def factorials_invertible(self, order: int) -> bool:
        """True when [n]_q! != 0 for every n <= order (fails only at q = -1, order >= 2)."""
        return self.q_factorial(order) != 0

    def require_divided_powers(self, order: int, operation: str) -> None:
        """Reject the t^n/[n]_q! normalization up to order when a q-factorial vanishes."""
        if not self.factorials_invertible(order):
            raise UnsupportedParameterException(
                f"{operation} of order {order} needs [n]_q! != 0, but q = {format_rational(self.q)} makes it vanish"
            )
