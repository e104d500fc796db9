import logging
import threading
import time
from collections import OrderedDict

from krcrystal.config import settings
from krcrystal.services.cartan import CartanType
from krcrystal.services.kr import KRCrystal

logger = logging.getLogger("krcrystal.crystal_cache")

CrystalKey = tuple[CartanType, int, int]


class CrystalCache:
    """Process-wide LRU of KRCrystal objects, so sigma memos survive between requests."""

    def __init__(self, maxsize: int | None = None) -> None:
        self._items: OrderedDict[CrystalKey, KRCrystal] = OrderedDict()
        self._maxsize = maxsize or settings.COMPONENT_CACHE
        self._lock = threading.Lock()

    def get(self, cartan: CartanType, r: int, s: int) -> KRCrystal:
        key = (cartan, r, s)
        crystal = self._items.get(key)
        if crystal is not None:
            with self._lock:
                if key in self._items:
                    self._items.move_to_end(key)
            logger.debug("crystal_cache_hit", extra={"extra": {"crystal": crystal.label}})
            return crystal

        with self._lock:
            # Double-check after acquiring lock
            crystal = self._items.get(key)
            if crystal is not None:
                self._items.move_to_end(key)
                return crystal

            start = time.time()
            crystal = KRCrystal(cartan, r, s)
            self._items[key] = crystal
            if len(self._items) > self._maxsize:
                evicted, _ = self._items.popitem(last=False)
                logger.info(
                    "crystal_cache_evicted",
                    extra={"extra": {"cartan": str(evicted[0]), "r": evicted[1], "s": evicted[2]}},
                )
            logger.info(
                "crystal_cache_miss",
                extra={
                    "extra": {
                        "crystal": crystal.label,
                        "duration_ms": round((time.time() - start) * 1000, 1),
                    }
                },
            )
            return crystal

    def __len__(self) -> int:
        return len(self._items)

    def clear(self) -> None:
        with self._lock:
            self._items.clear()


crystal_cache = CrystalCache()
