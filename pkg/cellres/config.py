# config.py
import logging
import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

from cellres.exceptions import ConfigurationError, ParseError
from cellres.monomials import CoefficientField

# Load environment variables from .env file
load_dotenv()

DEFAULT_LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class Settings:
    """Runtime settings read from the environment"""

    log_level: str = "WARNING"
    log_format: str = DEFAULT_LOG_FORMAT
    max_subset_generators: int = 16
    workers: int = 1
    default_field: str = "Q"

    @classmethod
    def from_env(cls):
        """Build settings from CELLRES_* environment variables

        Returns:
            Settings: validated settings
        """
        log_level = os.getenv("CELLRES_LOG_LEVEL", cls.log_level).upper()
        if not isinstance(logging.getLevelName(log_level), int):
            raise ConfigurationError(f"CELLRES_LOG_LEVEL: unknown level {log_level!r}")

        max_subset = _int_from_env("CELLRES_MAX_SUBSET_GENERATORS", cls.max_subset_generators)
        if max_subset < 1:
            raise ConfigurationError("CELLRES_MAX_SUBSET_GENERATORS must be at least 1")

        workers = _int_from_env("CELLRES_WORKERS", cls.workers)
        if workers < 1:
            raise ConfigurationError("CELLRES_WORKERS must be at least 1")

        default_field = os.getenv("CELLRES_DEFAULT_FIELD", cls.default_field)
        try:
            CoefficientField.parse(default_field)
        except ParseError as e:
            raise ConfigurationError(f"CELLRES_DEFAULT_FIELD: {e}") from None

        return cls(
            log_level=log_level,
            log_format=os.getenv("CELLRES_LOG_FORMAT", cls.log_format),
            max_subset_generators=max_subset,
            workers=workers,
            default_field=default_field,
        )


def _int_from_env(key, default):
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{key}: expected an integer, got {raw!r}") from None


@lru_cache(maxsize=1)
def get_settings():
    """Return the process-wide settings (read once)"""
    return Settings.from_env()


def setup_logging(level=None):
    """Configure root logging to standard error

    Args:
        level (str or int, optional): overrides CELLRES_LOG_LEVEL
    """
    settings = get_settings()
    logging.basicConfig(
        level=level if level is not None else settings.log_level,
        format=settings.log_format,
    )
