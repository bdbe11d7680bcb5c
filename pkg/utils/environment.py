import os

from .globals import DEFAULT_MAX_SEGMENTS, DEFAULT_WORKERS
from .logger_config import logger

ENV_MAX_SEGMENTS = "CEVIAN_MAX_SEGMENTS"
ENV_WORKERS = "CEVIAN_WORKERS"
ENV_AFFINE_CHECK = "CEVIAN_AFFINE_CHECK"

TRUE_VALUES = ["1", "true", "yes", "on"]


def _env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"{name}={raw!r} is not an integer - using default {default}")
        return default
    if value < minimum:
        logger.warning(f"{name}={value} is below {minimum} - using default {default}")
        return default
    logger.debug(f"{name} set to {value} from environment")
    return value


def max_segments() -> int:
    """Oracle guard rail; read on every call so tests can monkeypatch the env."""
    return _env_int(ENV_MAX_SEGMENTS, DEFAULT_MAX_SEGMENTS, minimum=3)


def default_workers() -> int:
    return _env_int(ENV_WORKERS, DEFAULT_WORKERS, minimum=1)


def affine_check_enabled() -> bool:
    return os.environ.get(ENV_AFFINE_CHECK, "").strip().lower() in TRUE_VALUES
