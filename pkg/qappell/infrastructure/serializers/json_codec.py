"""
JSON encoding of polynomials, series and reports.
"""
import json
from typing import Any

from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.series import BiTruncSeries, TruncSeries
from qappell.domain.models.verification_report import VerificationReport


def to_payload(value: Any) -> Any:
    """Convert domain values to JSON-ready structures."""
    if isinstance(value, (MultiPoly, TruncSeries, BiTruncSeries)):
        return value.to_json()
    if isinstance(value, VerificationReport):
        return value.to_dict()
    return value


def dumps(value: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_payload(value), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
