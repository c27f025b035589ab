"""
Application configuration loaded from environment variables.
"""
import os
from typing import List, Tuple


class Config:
    """Base configuration class."""

    # Truncation defaults
    DEFAULT_ORDER: int = int(os.getenv("QAPPELL_DEFAULT_ORDER", "8"))
    DEFAULT_MAX_N: int = int(os.getenv("QAPPELL_DEFAULT_MAX_N", "8"))

    # Sweep settings
    MAX_WORKERS: int = int(os.getenv("QAPPELL_MAX_WORKERS", "4"))
    RANDOM_SEED: int = int(os.getenv("QAPPELL_RANDOM_SEED", "20240611"))

    # Acceptance workloads
    LEIBNIZ_PAIRS: int = int(os.getenv("QAPPELL_LEIBNIZ_PAIRS", "50"))
    MEHLER_ORDER: int = int(os.getenv("QAPPELL_MEHLER_ORDER", "5"))
    ROGERS_ORDER: int = int(os.getenv("QAPPELL_ROGERS_ORDER", "5"))
    GENFUN_ORDER: int = int(os.getenv("QAPPELL_GENFUN_ORDER", "6"))

    # Logging
    LOG_LEVEL: str = os.getenv("QAPPELL_LOG_LEVEL", "WARNING")
    LOG_FORMAT: str = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"

    # Default grid; "q" and "q^2" are made concrete per q value
    DEFAULT_GRID_Q: List[str] = ["1/2", "2/3", "2", "3", "1"]
    DEFAULT_GRID_U: List[str] = ["0", "1", "1/2", "q", "q^2"]
    DEFAULT_GRID_EXTRA_POINTS: List[Tuple[str, str]] = [("1/4", "1/2")]
