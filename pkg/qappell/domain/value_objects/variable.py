"""
Polynomial variable value object.
"""
from enum import Enum
from typing import Union


class Variable(str, Enum):
    """
    The five canonical variables of the polynomial ring.

    The declaration order is the canonical term order x < y < z < w < a.
    """
    X = "x"
    Y = "y"
    Z = "z"
    W = "w"
    A = "a"

    @property
    def index(self) -> int:
        """Position of the variable in a dense exponent vector."""
        return _INDEX[self]

    @classmethod
    def of(cls, value: Union["Variable", str]) -> "Variable":
        """Coerce a name such as "x" into a Variable."""
        if isinstance(value, Variable):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(f"Unknown variable '{value}' (expected one of x, y, z, w, a)")


VARIABLES = tuple(Variable)
_INDEX = {variable: position for position, variable in enumerate(VARIABLES)}
NVARS = len(VARIABLES)
