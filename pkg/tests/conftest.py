"""Shared fixtures for lahlab tests."""

import pytest
from click.testing import CliRunner

from lahlab import sequences


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the config file at a fresh temp path and drop env overrides."""
    import lahlab.config as config_mod

    test_config = tmp_path / "test_config.json"
    monkeypatch.setattr(config_mod, "CONFIG_PATH", test_config)
    monkeypatch.delenv("LAHLAB_WORKERS", raising=False)
    monkeypatch.delenv("LAHLAB_FORMAT", raising=False)
    yield test_config


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def corrupted_lah(monkeypatch):
    """L(3, 2) replaced by 99 in the shared Lah triangle for one test."""
    sequences.LAH.extend_to(3)
    rows = [list(row) for row in sequences.LAH._rows]
    rows[3][2] = 99
    monkeypatch.setattr(sequences.LAH, "_rows", rows)
    yield sequences.LAH
