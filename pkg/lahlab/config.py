"""Runtime configuration for lahlab."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from .models import OutputFormat

BASE_DIR = Path(__file__).resolve().parent.parent
DATA_DIR = BASE_DIR / "data"
CONFIG_PATH = DATA_DIR / "config.json"


class LabConfig(BaseModel):
    """Defaults for CLI runs; every field can be overridden by a flag."""

    # Truncation order for generating-function checks.
    series_order: int = Field(default=12, ge=1)
    suite_nmax: int = Field(default=12, ge=1)
    output_format: OutputFormat = OutputFormat.PLAIN
    # Threads used by the suite runner; report order does not depend on it.
    workers: int = Field(default=1, ge=1)
    metrics_file: Optional[str] = None


def load_config() -> LabConfig:
    """Read ``data/config.json`` if present, then apply environment overrides.

    ``LAHLAB_WORKERS`` and ``LAHLAB_FORMAT`` win over the file. The file is
    never written back.
    """
    data = _load_config_file()

    workers = os.getenv("LAHLAB_WORKERS")
    if workers:
        data["workers"] = workers
    fmt = os.getenv("LAHLAB_FORMAT")
    if fmt:
        data["output_format"] = fmt.lower()

    return LabConfig(**data)


def _load_config_file() -> dict:
    if not CONFIG_PATH.exists():
        return {}
    with CONFIG_PATH.open("r", encoding="utf-8") as fp:
        return json.load(fp)
