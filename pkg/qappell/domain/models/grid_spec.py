"""
GridSpec: the (q, u) points a verification sweep runs over.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from qappell.domain.exceptions.domain_exceptions import InvalidGridException, InvalidRationalException
from qappell.domain.value_objects.rational import format_rational, parse_rational

SYMBOLIC_U = {"q": 1, "q^2": 2}


@dataclass(frozen=True)
class GridPoint:
    q: Fraction
    u: Fraction

    def describe(self) -> Dict[str, str]:
        return {"q": format_rational(self.q), "u": format_rational(self.u)}


@dataclass(frozen=True)
class SuiteRequirements:
    """Parameter restrictions a suite imposes on grid points."""
    q_not_one: bool = False
    q_nonzero: bool = False
    u_nonzero: bool = False
    divided_powers: bool = False

    def rejection(self, point: GridPoint) -> str:
        """Reason the point is excluded, or an empty string."""
        if self.divided_powers and point.q == -1:
            return "q = -1"
        if self.q_not_one and point.q == 1:
            return "q = 1"
        if self.q_nonzero and point.q == 0:
            return "q = 0"
        if self.u_nonzero and point.u == 0:
            return "u = 0"
        return ""


@dataclass(frozen=True)
class GridSpec:
    """Nonempty ordered list of distinct grid points."""
    points: Tuple[GridPoint, ...]

    def __post_init__(self):
        if not self.points:
            raise InvalidGridException("Grid is empty")
        deduped = tuple(dict.fromkeys(self.points))
        object.__setattr__(self, "points", deduped)

    @classmethod
    def from_values(cls, q_values: Sequence, u_values: Sequence) -> "GridSpec":
        """
        Cartesian grid. u entries may be the symbols "q" and "q^2", made
        concrete for each q.
        """
        if not q_values or not u_values:
            raise InvalidGridException("Grid needs at least one q value and one u value")
        points: List[GridPoint] = []
        for q_raw in q_values:
            q = _parse_grid_rational(q_raw)
            for u_raw in u_values:
                if isinstance(u_raw, str) and u_raw.strip() in SYMBOLIC_U:
                    u = q ** SYMBOLIC_U[u_raw.strip()]
                else:
                    u = _parse_grid_rational(u_raw)
                points.append(GridPoint(q, u))
        return cls(tuple(points))

    @classmethod
    def from_points(cls, pairs: Iterable[Tuple[Union[str, Fraction, int], Union[str, Fraction, int]]]) -> "GridSpec":
        return cls(tuple(GridPoint(_parse_grid_rational(q), _parse_grid_rational(u)) for q, u in pairs))

    def select(self, requirements: SuiteRequirements) -> Tuple[List[GridPoint], List[Dict[str, str]]]:
        """
        Split the grid for one suite.

        Returns:
            Kept points in grid order, and the excluded points with reasons
        """
        kept, excluded = [], []
        for point in self.points:
            reason = requirements.rejection(point)
            if reason:
                excluded.append({**point.describe(), "reason": reason})
            else:
                kept.append(point)
        return kept, excluded


def _parse_grid_rational(value) -> Fraction:
    try:
        return parse_rational(value)
    except InvalidRationalException as e:
        raise InvalidGridException(f"Invalid grid value: {e}") from e
