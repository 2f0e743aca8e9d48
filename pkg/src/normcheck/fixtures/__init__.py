"""Shipped norm and fact fixtures. Each .norm file renders one real-life
norm in the DSL; the paired .facts files give a conforming and, where the
effect is positive, a violating scenario. Header comments in each file
state the tick unit."""

from __future__ import annotations

from pathlib import Path

_DIR = Path(__file__).resolve().parent


def path(name: str) -> Path:
    """Absolute path of a shipped fixture file."""
    candidate = _DIR / name
    if not candidate.is_file():
        raise FileNotFoundError(f"no fixture named {name}")
    return candidate


def names(suffix: str = "") -> list[str]:
    """Fixture file names, optionally filtered by suffix."""
    return sorted(p.name for p in _DIR.iterdir() if p.is_file() and p.name.endswith(suffix) and not p.name.endswith(".py"))
