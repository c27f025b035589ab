"""
OperatorSpec: which q-exponential or q-Appell operator series to apply.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from qappell.domain.exceptions.domain_exceptions import InvalidOperandException
from qappell.domain.models.appell_family import AppellFamily
from qappell.domain.value_objects.variable import Variable


class OperatorFlavor(str, Enum):
    """
    T_EXPONENTIAL:  sum_k u^C(k,2) y^k D_x^k/[k]!
    APPELL_UNIVAR:  sum_k u^C(k,2) a_k y^k D_x^k/[k]!
    APPELL_TRIVAR:  sum_k P_k(x;u) y^k D_z^k/[k]!
    """
    T_EXPONENTIAL = "T_exponential"
    APPELL_UNIVAR = "appell_univar"
    APPELL_TRIVAR = "appell_trivar"


@dataclass(frozen=True)
class OperatorSpec:
    """An operator flavor bound to its family (T needs none)."""
    flavor: OperatorFlavor
    family: Optional[AppellFamily] = None

    def __post_init__(self):
        if self.flavor is not OperatorFlavor.T_EXPONENTIAL and self.family is None:
            raise InvalidOperandException(f"Operator {self.flavor.value} needs an Appell family")

    @property
    def derivative_variable(self) -> Variable:
        """The variable the D_q powers act on."""
        if self.flavor is OperatorFlavor.APPELL_TRIVAR:
            return Variable.Z
        return Variable.X

    @classmethod
    def exponential(cls) -> "OperatorSpec":
        return cls(OperatorFlavor.T_EXPONENTIAL)
