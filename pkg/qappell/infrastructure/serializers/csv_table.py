"""
CSV rendering of polynomial term tables.
"""
import pandas as pd

from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.value_objects.rational import format_rational

COLUMNS = ["ex", "ey", "ez", "ew", "ea", "coeff"]


def term_frame(poly: MultiPoly) -> pd.DataFrame:
    """One row per term in canonical order; coefficients stay exact strings."""
    rows = [list(exponent) + [format_rational(coefficient)] for exponent, coefficient in poly.terms()]
    return pd.DataFrame(rows, columns=COLUMNS)


def to_csv(poly: MultiPoly) -> str:
    return term_frame(poly).to_csv(index=False, lineterminator="\n")
