"""
AppellSet entity: the polynomial set {P_n} of a family with its coefficient matrix.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from qappell.domain.exceptions.domain_exceptions import DegeneracyException, IndexOutOfRangeException
from qappell.domain.models.appell_family import AppellFamily
from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.qcontext import QContext
from qappell.domain.value_objects.variable import NVARS, Variable


@dataclass(frozen=True)
class AppellSet:
    """
    Polynomials P_0..P_N in x with P_n = sum_k f(n, k) x^k.

    `family` is None for sets produced by the coefficient-matrix product,
    which never passes through a determining series.
    """
    components: Tuple[MultiPoly, ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]
    ctx: QContext
    family: Optional[AppellFamily] = None

    @classmethod
    def from_components(cls, components, ctx: QContext, family: Optional[AppellFamily] = None) -> "AppellSet":
        """
        Build a set from P_0..P_N.

        Raises:
            DegeneracyException: If some P_n does not have degree exactly n
        """
        components = tuple(components)
        matrix = tuple(
            tuple(p.coefficient(_x_exponent(k)) for k in range(n + 1))
            for n, p in enumerate(components)
        )
        appell_set = cls(components, matrix, ctx, family)
        if not appell_set.is_lower_triangular_with_nonzero_diagonal():
            raise DegeneracyException("Coefficient matrix is not lower-triangular with a nonzero diagonal")
        return appell_set

    @property
    def order(self) -> int:
        return len(self.components) - 1

    def component(self, n: int) -> MultiPoly:
        if not 0 <= n <= self.order:
            raise IndexOutOfRangeException(f"Component {n} outside set of order {self.order}")
        return self.components[n]

    def f(self, n: int, k: int) -> Fraction:
        """Matrix entry f(n, k); zero above the diagonal."""
        if k > n:
            return Fraction(0)
        return self.matrix[n][k]

    def is_lower_triangular_with_nonzero_diagonal(self) -> bool:
        return all(
            self.components[n].degree(Variable.X) == n and self.matrix[n][n] != 0
            for n in range(self.order + 1)
        )


def _x_exponent(k: int) -> tuple:
    exponent = [0] * NVARS
    exponent[Variable.X.index] = k
    return tuple(exponent)
