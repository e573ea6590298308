"""Locate bundled data files, honoring the LEXIGAUGE_PRESET_DIR override."""
from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

ENV_VAR = "LEXIGAUGE_PRESET_DIR"


def data_dir() -> Path:
    """Directory holding the bundled CSV tables. LEXIGAUGE_PRESET_DIR, when
    set, replaces it wholesale so users can point at their own tables."""
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(resources.files("lexigauge") / "data")


def data_path(name: str) -> Path:
    path = data_dir() / name
    if not path.is_file():
        raise FileNotFoundError(
            f"bundled data file {name!r} not found in {data_dir()} "
            f"(set {ENV_VAR} to a directory containing it, or unset it)"
        )
    return path
