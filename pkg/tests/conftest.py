"""Shared fixtures for lanemden tests."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Callable

import pytest

from lanemden.config import VerifyConfig


@pytest.fixture(autouse=True)
def _isolate_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep the developer's debug and tolerance settings out of the tests."""
    monkeypatch.delenv("LE_DEBUG", raising=False)
    monkeypatch.delenv("LE_DEBUG_LOG_PATH", raising=False)
    monkeypatch.delenv("LE_VERIFY_TOL", raising=False)


@pytest.fixture()
def tmp_config_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Redirect XDG_CONFIG_HOME to a temp directory so settings.json is isolated."""
    config_home = tmp_path / "config"
    config_home.mkdir()
    monkeypatch.setenv("XDG_CONFIG_HOME", str(config_home))
    return config_home / "lanemden"


@pytest.fixture()
def quick_verify() -> VerifyConfig:
    """Coarse ξ grid so end-to-end verification stays fast."""
    return VerifyConfig(points=40)


@pytest.fixture()
def write_settings(tmp_config_dir: Path) -> Callable[[object], Path]:
    """Return a writer for settings.json in the temp config dir."""

    def write(data: object) -> Path:
        tmp_config_dir.mkdir(parents=True, exist_ok=True)
        path = tmp_config_dir / "settings.json"
        path.write_text(json.dumps(data, indent=2))
        return path

    return write
