"""
Descriptor source port interface (contract).
"""
from abc import ABC, abstractmethod
from typing import Any, Dict

from qappell.domain.models.grid_spec import GridSpec


class DescriptorSourcePort(ABC):
    """
    Port interface for reading family descriptors and grids.
    """

    @abstractmethod
    def load_family_descriptor(self, path: str) -> Dict[str, Any]:
        """
        Read a family descriptor.

        Args:
            path: Location of the descriptor

        Returns:
            Descriptor dictionary with at least "kind" and "alpha"; custom
            families also carry "base" (or "a") as a list of rational strings
        """
        pass

    @abstractmethod
    def load_grid(self, path: str) -> GridSpec:
        """
        Read a grid of (q, u) points.

        Args:
            path: Location of the grid

        Returns:
            GridSpec
        """
        pass
