"""Environment-driven defaults: arithmetic mode and postcondition checking."""

from __future__ import annotations

import os

from .arithmetic import EXACT, FLOAT, Mode

MODE_ENV_VAR = "MAXMONO_MODE"
CHECKS_ENV_VAR = "MAXMONO_CHECKS"


def mode_from_name(name: str) -> Mode:
    key = name.strip().lower()
    if key == "exact":
        return EXACT
    if key == "float":
        return FLOAT
    raise ValueError(f"unknown arithmetic mode {name!r} (expected 'exact' or 'float')")


def default_mode() -> Mode:
    return mode_from_name(os.environ.get(MODE_ENV_VAR, "exact"))


def postconditions_enabled() -> bool:
    """Theorem postconditions are assertions, not runtime conditions.

    They run by default (catching arithmetic-mode bugs is the point of the
    suite) and can be switched off for release-profile runs.
    """
    return os.environ.get(CHECKS_ENV_VAR, "on").strip().lower() not in ("off", "0", "false")
