"""
Tests for grids and the JSON descriptor loader.
"""
import json
from fractions import Fraction

import pytest

from qappell.domain.exceptions.domain_exceptions import FamilyConstructionException, InvalidGridException
from qappell.domain.models.grid_spec import GridPoint, GridSpec, SuiteRequirements
from qappell.infrastructure.loaders.json_descriptor_loader import JsonDescriptorLoader


def test_symbolic_u_values_follow_q():
    grid = GridSpec.from_values(["2", "1/2"], ["1", "q", "q^2"])
    assert grid.points == (
        GridPoint(Fraction(2), Fraction(1)), GridPoint(Fraction(2), Fraction(2)), GridPoint(Fraction(2), Fraction(4)),
        GridPoint(Fraction(1, 2), Fraction(1)), GridPoint(Fraction(1, 2), Fraction(1, 2)),
        GridPoint(Fraction(1, 2), Fraction(1, 4)),
    )


def test_duplicate_points_are_dropped():
    grid = GridSpec.from_values(["1"], ["1", "q", "q^2"])
    assert grid.points == (GridPoint(Fraction(1), Fraction(1)),)


@pytest.mark.parametrize("q_values, u_values", [([], ["1"]), (["1"], []), (["x"], ["1"])])
def test_invalid_grids(q_values, u_values):
    with pytest.raises(InvalidGridException):
        GridSpec.from_values(q_values, u_values)


def test_select_reports_excluded_points():
    grid = GridSpec.from_points([("1", "1"), ("1/2", "0"), ("0", "2"), ("2", "3")])
    kept, excluded = grid.select(SuiteRequirements(q_not_one=True, q_nonzero=True, u_nonzero=True))
    assert kept == [GridPoint(Fraction(2), Fraction(3))]
    assert [item["reason"] for item in excluded] == ["q = 1", "u = 0", "q = 0"]
    assert excluded[0] == {"q": "1", "u": "1", "reason": "q = 1"}


@pytest.fixture
def loader() -> JsonDescriptorLoader:
    return JsonDescriptorLoader()


def test_load_grid_points(loader, tmp_path):
    path = tmp_path / "grid.json"
    path.write_text(json.dumps({"points": [{"q": "1/2", "u": "1/3"}, {"q": 2, "u": "0"}]}))
    grid = loader.load_grid(str(path))
    assert grid.points == (GridPoint(Fraction(1, 2), Fraction(1, 3)), GridPoint(Fraction(2), Fraction(0)))


def test_load_grid_cartesian(loader, tmp_path):
    path = tmp_path / "grid.json"
    path.write_text(json.dumps({"q": ["3"], "u": ["q^2"]}))
    assert loader.load_grid(str(path)).points == (GridPoint(Fraction(3), Fraction(9)),)


@pytest.mark.parametrize("content", ['{"points": []}', '{"points": [{"q": "1"}]}', "[1, 2]", "{}", "not json"])
def test_load_grid_rejects(loader, tmp_path, content):
    path = tmp_path / "grid.json"
    path.write_text(content)
    with pytest.raises(InvalidGridException):
        loader.load_grid(str(path))


def test_missing_grid_file(loader, tmp_path):
    with pytest.raises(InvalidGridException):
        loader.load_grid(str(tmp_path / "absent.json"))


def test_load_family_descriptor(loader, tmp_path):
    path = tmp_path / "family.json"
    path.write_text(json.dumps({"kind": "custom", "alpha": 2, "base": ["1", "1/2"]}))
    assert loader.load_family_descriptor(str(path))["base"] == ["1", "1/2"]
    path.write_text(json.dumps({"alpha": 2}))
    with pytest.raises(FamilyConstructionException):
        loader.load_family_descriptor(str(path))
