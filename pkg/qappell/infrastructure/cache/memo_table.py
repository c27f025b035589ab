"""
Memo table (thread-safe in-memory cache).
"""
import threading
from typing import Any, Callable, Hashable, Optional


class MemoTable:
    """
    In-memory memo table shared by concurrent readers.

    Entries never expire: memoized values are pure functions of their key.
    """

    def __init__(self):
        """Initialize an empty table."""
        self._cache: dict = {}
        self._lock = threading.RLock()

    def get(self, key: Hashable) -> Optional[Any]:
        """
        Get a value from the table.

        Args:
            key: Memo key

        Returns:
            Stored value or None if absent
        """
        with self._lock:
            return self._cache.get(key)

    def set(self, key: Hashable, value: Any) -> None:
        """
        Store a value.

        Args:
            key: Memo key
            value: Value to store
        """
        with self._lock:
            self._cache[key] = value

    def get_or_compute(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """
        Return the stored value for key, computing it with factory on a miss.

        The lock is re-entrant so factories may consult the same table
        recursively (q-factorials are built from smaller q-factorials).

        Args:
            key: Memo key
            factory: Zero-argument callable producing the value

        Returns:
            The memoized value
        """
        with self._lock:
            if key in self._cache:
                return self._cache[key]
            value = factory()
            self._cache[key] = value
            return value

    def __contains__(self, key: Hashable) -> bool:
        with self._lock:
            return key in self._cache

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)

    def clear(self) -> None:
        """Clear all entries."""
        with self._lock:
            self._cache.clear()
