"""
AppellFamily entity: a determining series raised to an integer order.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from qappell.domain.exceptions.domain_exceptions import IndexOutOfRangeException
from qappell.domain.models.qcontext import QContext
from qappell.domain.models.series import TruncSeries
from qappell.domain.value_objects.rational import format_rational


class FamilyKind(str, Enum):
    """Named determining functions."""
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"
    CUSTOM = "custom"

    @classmethod
    def of(cls, name: str) -> "FamilyKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"Unknown family kind '{name}'") from None


@dataclass(frozen=True)
class AppellFamily:
    """
    Deformed q-Appell family of integer order alpha.

    `coefficients` holds a_0^(alpha)..a_N^(alpha), the divided-power
    coefficients of base^alpha. `vanishing_order` is the order of vanishing of
    the base at t = 0; a positive value marks a degenerate family such as
    Genocchi, whose polynomials drop degree. `base` is None for families given
    directly by their numbers, whose own vanishing order is used instead.
    """
    ctx: QContext
    alpha: int
    coefficients: Tuple[Fraction, ...]
    vanishing_order: int
    kind: FamilyKind = FamilyKind.CUSTOM
    base: Optional[TruncSeries] = None

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_degenerate(self) -> bool:
        return self.vanishing_order > 0

    def a(self, n: int) -> Fraction:
        """The number a_n^(alpha)."""
        if not 0 <= n <= self.order:
            raise IndexOutOfRangeException(f"Index {n} outside family of order {self.order}")
        return self.coefficients[n]

    @property
    def determining(self) -> TruncSeries:
        """base^alpha as a series with scalar coefficients."""
        return TruncSeries.from_coeffs(self.coefficients, self.ctx)

    def descriptor(self) -> Dict[str, Any]:
        """Family descriptor JSON."""
        payload: Dict[str, Any] = {
            "kind": self.kind.value,
            "alpha": self.alpha,
            "order": self.order,
            **self.ctx.describe(),
            "a": [format_rational(c) for c in self.coefficients],
        }
        if self.kind is FamilyKind.CUSTOM and self.base is not None:
            payload["base"] = [format_rational(c) for c in self.base.scalars()]
        return payload

    def label(self) -> str:
        return f"{self.kind.value}({self.alpha})"
