"""
JSON loader for family descriptors and grid files.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict

from qappell.domain.exceptions.domain_exceptions import FamilyConstructionException, InvalidGridException
from qappell.domain.models.grid_spec import GridSpec
from qappell.domain.ports.descriptor_source_port import DescriptorSourcePort

logger = logging.getLogger(__name__)


class JsonDescriptorLoader(DescriptorSourcePort):
    """Reads descriptors and grids from JSON files."""

    def load_family_descriptor(self, path: str) -> Dict[str, Any]:
        data = self._read(path, FamilyConstructionException)
        if not isinstance(data, dict) or "kind" not in data:
            raise FamilyConstructionException(f"Family descriptor {path} needs a 'kind' field")
        return data

    def load_grid(self, path: str) -> GridSpec:
        """
        Accepts {"points": [{"q": ..., "u": ...}, ...]} or {"q": [...], "u": [...]}.
        """
        data = self._read(path, InvalidGridException)
        if not isinstance(data, dict):
            raise InvalidGridException(f"Grid file {path} must hold a JSON object")
        if "points" in data:
            try:
                pairs = [(point["q"], point["u"]) for point in data["points"]]
            except (KeyError, TypeError) as e:
                raise InvalidGridException(f"Malformed grid point in {path}: {e}") from e
            return GridSpec.from_points(pairs)
        if "q" in data and "u" in data:
            return GridSpec.from_values(list(data["q"]), list(data["u"]))
        raise InvalidGridException(f"Grid file {path} needs 'points' or both 'q' and 'u'")

    @staticmethod
    def _read(path: str, error_class):
        file_path = Path(path)
        if not file_path.exists():
            raise error_class(f"File not found: {path}")
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise error_class(f"Invalid JSON in {path}: {e}") from e
        logger.info(f"Loaded {path}")
        return data
