"""Prometheus metrics for identity-suite runs.

The suite runner records one sample per check; ``lahlab verify
--metrics-file PATH`` dumps the registry in the textfile-collector format so a
node exporter can pick the results up after a scheduled run.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

# Dedicated registry so the default process collectors stay out of the file.
REGISTRY = CollectorRegistry()

IDENTITY_CHECKS_TOTAL = Counter(
    "lahlab_identity_checks_total",
    "Identity checks executed, by suite, identity and outcome.",
    ("suite", "identity", "status"),
    registry=REGISTRY,
)

IDENTITY_CHECK_DURATION_SECONDS = Histogram(
    "lahlab_identity_check_duration_seconds",
    "Wall time of single identity checks.",
    ("suite",),
    registry=REGISTRY,
)


def record_check(suite: str, identity: str, status: str, elapsed: float) -> None:
    IDENTITY_CHECKS_TOTAL.labels(suite=suite, identity=identity, status=status).inc()
    IDENTITY_CHECK_DURATION_SECONDS.labels(suite=suite).observe(elapsed)


def write_metrics(path: Union[str, Path]) -> Path:
    """Write the registry snapshot to ``path`` and return it."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(path), REGISTRY)
    return path
