from __future__ import annotations

import os
from pathlib import Path

from .errors import ConfigurationError


def _parse_csv_env(name: str) -> list[str]:
    raw = os.getenv(name, "").strip()
    if not raw:
        return []
    return [x.strip() for x in raw.split(",") if x.strip()]


def _parse_int_env(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from e
    if value < minimum:
        raise ConfigurationError(f"{name} must be >= {minimum}, got {value}")
    return value


def _parse_bool_env(name: str, default: bool = False) -> bool:
    raw = os.getenv(name, "").strip().lower()
    if not raw:
        return default
    if raw in ("1", "true", "yes", "on"):
        return True
    if raw in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError(f"{name} must be a boolean flag, got {raw!r}")


# Worker processes for verify/enumerate when --workers is not given.
DEFAULT_WORKERS = _parse_int_env("OVERLAB_WORKERS", 1)

# Checked mode for map/unmap when neither --checked nor --no-checked is given.
DEFAULT_CHECKED = _parse_bool_env("OVERLAB_CHECKED", False)

LOG_LEVEL = os.getenv("OVERLAB_LOG_LEVEL", "INFO").strip().upper() or "INFO"

REPORT_DIR = Path(os.getenv("OVERLAB_REPORT_DIR", "reports")).resolve()

# Restricts scripts/run_acceptance.py, e.g. OVERLAB_ACCEPTANCE_FAMILIES=SBAR,TBAR
ACCEPTANCE_FAMILIES = [x.upper() for x in _parse_csv_env("OVERLAB_ACCEPTANCE_FAMILIES")]
