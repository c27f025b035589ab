"""
VerificationReport: outcome of one identity check at one grid point.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from fractions import Fraction

from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.qcontext import QContext

Comparable = Union[MultiPoly, Fraction, int]
Comparison = Tuple[Any, Comparable, Comparable]


@dataclass
class VerificationReport:
    """
    `passed` refers to the identity as implemented. Printed forms that were
    checked and found to differ are listed under `discrepancies`; they never
    flip `passed`.
    """
    identity: str
    anchor: str
    params: Dict[str, str]
    order: int
    passed: bool
    first_failure: Optional[Dict[str, Any]] = None
    notes: List[str] = field(default_factory=list)
    discrepancies: List[Dict[str, Any]] = field(default_factory=list)
    checked: int = 0

    @classmethod
    def compare(cls, identity: str, anchor: str, ctx: QContext, order: int,
                comparisons: Iterable[Comparison], notes: Iterable[str] = ()) -> "VerificationReport":
        """
        Compare (index, lhs, rhs) triples exactly and keep the first failure.

        Args:
            identity: Identity name
            anchor: The identity in plain notation
            ctx: Parameters the comparison ran at
            order: Truncation order or index bound
            comparisons: (index, lhs, rhs) triples
            notes: Reading decisions applied

        Returns:
            VerificationReport
        """
        report = cls(identity, anchor, ctx.describe(), order, True, notes=list(notes))
        for index, lhs, rhs in comparisons:
            report.checked += 1
            if report.first_failure is None and not _equal(lhs, rhs):
                report.passed = False
                report.first_failure = _failure(index, lhs, rhs)
        return report

    def record_printed_form(self, label: str, comparisons: Iterable[Comparison]) -> bool:
        """
        Check a printed variant of the identity; a mismatch is recorded as a
        discrepancy.

        Returns:
            True if the printed form held at every index
        """
        for index, lhs, rhs in comparisons:
            if not _equal(lhs, rhs):
                self.discrepancies.append({"form": label, **_failure(index, lhs, rhs)})
                return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "anchor": self.anchor,
            "params": dict(self.params),
            "order": self.order,
            "pass": self.passed,
            "first_failure": self.first_failure,
            "notes": list(self.notes),
            "discrepancies": list(self.discrepancies),
        }


def _equal(lhs: Comparable, rhs: Comparable) -> bool:
    return MultiPoly.coerce(lhs) == MultiPoly.coerce(rhs)


def _failure(index: Any, lhs: Comparable, rhs: Comparable) -> Dict[str, Any]:
    return {
        "coeff_index": index,
        "lhs": MultiPoly.coerce(lhs).to_json(),
        "rhs": MultiPoly.coerce(rhs).to_json(),
    }
