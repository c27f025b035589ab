"""
Family factory: builds Appell families from determining series and descriptors.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from qappell.domain.exceptions.domain_exceptions import (
    FamilyConstructionException,
    InvalidRationalException,
    NonScalarCoefficientsException,
    ZeroConstantTermException,
)
from qappell.domain.models.appell_family import AppellFamily, FamilyKind
from qappell.domain.models.qcontext import QContext
from qappell.domain.models.series import TruncSeries, describe_series
from qappell.domain.value_objects.rational import RationalLike, parse_rational

logger = logging.getLogger(__name__)


class FamilyFactory:
    """
    Factory for deformed q-Appell families.
    """

    def family_from_series(self, base: TruncSeries, alpha: int,
                           kind: FamilyKind = FamilyKind.CUSTOM) -> AppellFamily:
        """
        Raise a determining series to an integer order.

        Args:
            base: Determining series with scalar coefficients
            alpha: Integer order
            kind: Family label

        Returns:
            AppellFamily
        """
        if not base.is_scalar():
            raise NonScalarCoefficientsException("Determining series must have variable-free coefficients")
        vanishing = base.vanishing_order()
        if vanishing > 0 and alpha < 0:
            raise ZeroConstantTermException(
                f"Determining series vanishes to order {vanishing} at t = 0; order {alpha} needs its inverse"
            )
        determining = base.ipow(alpha)
        coefficients = determining.scalars()
        logger.debug(
            f"Built {kind.value} family of order {alpha} at {base.ctx.describe()} "
            f"(vanishing order {vanishing}): {describe_series(determining)}"
        )
        return AppellFamily(base.ctx, alpha, coefficients, vanishing, kind, base)

    def custom(self, base_coefficients: Sequence[RationalLike], alpha: int, order: int,
               ctx: QContext) -> AppellFamily:
        """
        Family from divided-power base coefficients c_0, c_1, ...; missing entries are zero.
        """
        return self.family_from_series(TruncSeries.from_coeffs(_padded(base_coefficients, order), ctx), alpha)

    def from_numbers(self, coefficients: Sequence[RationalLike], alpha: int, order: int,
                     ctx: QContext) -> AppellFamily:
        """
        Family given by its numbers a_0^(alpha), a_1^(alpha), ... directly.

        The list is already the determining function raised to alpha, so no
        power is taken; alpha is kept as the family's label. Missing entries
        are zero.

        Args:
            coefficients: Divided-power coefficients of base^alpha
            alpha: Integer order the numbers belong to
            order: Truncation order N
            ctx: (q, u) parameters

        Returns:
            AppellFamily without a base series
        """
        determining = TruncSeries.from_coeffs(_padded(coefficients, order), ctx)
        vanishing = determining.vanishing_order()
        if vanishing > 0 and alpha < 0:
            raise ZeroConstantTermException(
                f"Numbers of order {alpha} must start with a nonzero a_0, got vanishing order {vanishing}"
            )
        logger.debug(f"Built custom family of order {alpha} from its numbers: {describe_series(determining)}")
        return AppellFamily(ctx, alpha, determining.scalars(), vanishing)

    def base_series(self, kind: FamilyKind, order: int, ctx: QContext) -> TruncSeries:
        """
        Determining function of a named family.

        Bernoulli: inverse of (e_q(t) - 1)/t, whose n-th coefficient is 1/[n+1]_q.
        Euler: inverse of (e_q(t) + 1)/2.
        Genocchi: t times the Euler series.
        """
        ctx.require_divided_powers(order, f"{kind.value} determining function")
        if kind is FamilyKind.BERNOULLI:
            ctx.require_divided_powers(order + 1, "bernoulli determining function")
            return TruncSeries.tabulate(order, ctx, lambda n: 1 / ctx.q_number(n + 1)).inverse()
        if kind is FamilyKind.EULER:
            return TruncSeries.tabulate(order, ctx, lambda n: 1 if n == 0 else Fraction(1, 2)).inverse()
        if kind is FamilyKind.GENOCCHI:
            if order == 0:
                return TruncSeries.zero(0, ctx)
            return self.base_series(FamilyKind.EULER, order - 1, ctx).shift_up(1)
        raise FamilyConstructionException(f"{kind.value} is not a named family")

    def named_family(self, kind: FamilyKind, alpha: int, order: int, ctx: QContext) -> AppellFamily:
        """
        Bernoulli, Euler or Genocchi family of order alpha.

        Args:
            kind: Family name
            alpha: Integer order
            order: Truncation order N
            ctx: (q, u) parameters

        Returns:
            AppellFamily
        """
        return self.family_from_series(self.base_series(kind, order, ctx), alpha, kind)

    def from_descriptor(self, descriptor: Dict[str, Any], ctx: Optional[QContext] = None,
                        order: Optional[int] = None) -> AppellFamily:
        """
        Build a family from its descriptor; explicit ctx/order override the descriptor's.
        """
        try:
            kind = FamilyKind.of(str(descriptor["kind"]))
            alpha = int(descriptor.get("alpha", 1))
            order = int(descriptor.get("order", 8)) if order is None else order
            if ctx is None:
                ctx = QContext.of(descriptor.get("q", "1/2"), descriptor.get("u", "1"))
        except (KeyError, ValueError, TypeError, InvalidRationalException) as e:
            raise FamilyConstructionException(f"Invalid family descriptor: {e}") from e
        if kind is not FamilyKind.CUSTOM:
            return self.named_family(kind, alpha, order, ctx)
        if "base" in descriptor:
            return self.custom(_coefficient_list(descriptor, "base"), alpha, order, ctx)
        if "a" in descriptor:
            return self.from_numbers(_coefficient_list(descriptor, "a"), alpha, order, ctx)
        raise FamilyConstructionException("Custom family descriptor needs a 'base' or an 'a' list")


def _padded(coefficients: Sequence[RationalLike], order: int) -> List[Fraction]:
    values = [parse_rational(c) for c in coefficients][:order + 1]
    return values + [Fraction(0)] * (order + 1 - len(values))

def _coefficient_list(descriptor: Dict[str, Any], field: str) -> List[Any]:
    coefficients = descriptor[field]
    if not isinstance(coefficients, list) or not coefficients:
        raise FamilyConstructionException(f"Custom family descriptor needs a nonempty '{field}' list")
    return coefficients
