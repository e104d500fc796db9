import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger("krcrystal.config")

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got '{raw}'") from exc


@dataclass(frozen=True)
class Settings:
    # Enumeration guards
    VERTEX_BUDGET: int = _int_env("KR_VERTEX_BUDGET", 1_000_000)
    TENSOR_BUDGET: int = _int_env("KR_TENSOR_BUDGET", 4_000_000)

    # Caches
    SIGMA_MEMO: bool = os.getenv("KR_SIGMA_MEMO", "true").lower() in ("1", "true", "yes")
    COMPONENT_CACHE: int = _int_env("KR_COMPONENT_CACHE", 64)

    # Logging
    LOG_LEVEL: str = os.getenv("KR_LOG_LEVEL", "INFO").strip().upper()

    def __post_init__(self) -> None:
        if self.VERTEX_BUDGET <= 0:
            raise ValueError(f"KR_VERTEX_BUDGET must be positive, got {self.VERTEX_BUDGET}")
        if self.TENSOR_BUDGET <= 0:
            raise ValueError(f"KR_TENSOR_BUDGET must be positive, got {self.TENSOR_BUDGET}")
        if self.COMPONENT_CACHE < 1:
            raise ValueError(f"KR_COMPONENT_CACHE must be at least 1, got {self.COMPONENT_CACHE}")
        if self.LOG_LEVEL not in _LOG_LEVELS:
            raise ValueError(
                f"KR_LOG_LEVEL must be one of {sorted(_LOG_LEVELS)}, got '{self.LOG_LEVEL}'"
            )

    def log_summary(self) -> None:
        """Log the effective settings."""
        logger.info(
            "settings_loaded",
            extra={
                "extra": {
                    "KR_VERTEX_BUDGET": self.VERTEX_BUDGET,
                    "KR_TENSOR_BUDGET": self.TENSOR_BUDGET,
                    "KR_SIGMA_MEMO": self.SIGMA_MEMO,
                    "KR_COMPONENT_CACHE": self.COMPONENT_CACHE,
                    "KR_LOG_LEVEL": self.LOG_LEVEL,
                }
            },
        )


settings = Settings()
