"""Per-directory settings for the tdc workbench.

Settings are stored in ./.tdc/settings.json relative to the current
working directory. The file is a flat JSON object, e.g.:

    {"node_budget": 2000000, "workers": 1, "format": "text", "verbose": false}

The directory and file are created automatically when any setter or
defaulting-write logic runs. ``TDC_NODE_BUDGET`` in the environment
overrides the persisted node budget.
"""

import json
import os

from tdc.locks import locked_json_rw

_SETTINGS_DIR = ".tdc"
_SETTINGS_FILE = os.path.join(_SETTINGS_DIR, "settings.json")

BUDGET_ENV = "TDC_NODE_BUDGET"

_DEFAULTS = {
    "node_budget": 2_000_000,
    "workers": 1,
    "format": "text",
    "verbose": False,
}

VALID_FORMATS = ["text", "json"]


def _read_settings() -> dict:
    """Read settings from disk, returning an empty dict if the file is absent or unreadable."""
    if not os.path.exists(_SETTINGS_FILE):
        return {}
    try:
        with open(_SETTINGS_FILE) as f:
            return json.load(f)
    except (json.JSONDecodeError, OSError):
        return {}


def _update_settings(**values) -> None:
    os.makedirs(_SETTINGS_DIR, exist_ok=True)
    with locked_json_rw(_SETTINGS_FILE) as data:
        data.update(values)


def _get_or_heal(key: str):
    data = _read_settings()
    if key not in data:
        _update_settings(**{key: _DEFAULTS[key]})
        return _DEFAULTS[key]
    return data[key]


def _positive_int(name: str, value) -> int | None:
    try:
        number = int(value)
    except (TypeError, ValueError):
        number = 0
    if number < 1:
        print(f"[tdc] Error: '{value}' is not a valid value for {name}. Use a positive integer.")
        return None
    return number


def get_node_budget() -> int:
    """Return the node budget: environment first, then the settings file."""
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        number = _positive_int(BUDGET_ENV, env)
        if number is not None:
            return number
    return int(_get_or_heal("node_budget"))


def set_node_budget(value) -> None:
    number = _positive_int("node_budget", value)
    if number is not None:
        _update_settings(node_budget=number)


def get_workers() -> int:
    return int(_get_or_heal("workers"))


def set_workers(value) -> None:
    number = _positive_int("workers", value)
    if number is not None:
        _update_settings(workers=number)


def get_format() -> str:
    value = str(_get_or_heal("format"))
    return value if value in VALID_FORMATS else "text"


def set_format(value: str) -> None:
    if value not in VALID_FORMATS:
        print(f"[tdc] Error: '{value}' is not a supported format. Choose from: {', '.join(VALID_FORMATS)}.")
        return
    _update_settings(format=value)


def get_verbose() -> bool:
    """Return the persisted verbose setting (default: False)."""
    return bool(_read_settings().get("verbose", False))


def set_verbose(value) -> None:
    """Persist the verbose setting.

    Accepts a bool or the strings 'true'/'false' (case-insensitive).
    """
    if isinstance(value, str) and value.lower() in ("true", "false"):
        value = value.lower() == "true"
    if not isinstance(value, bool):
        print(f"[tdc] Error: '{value}' is not a valid value for verbose. Use true or false.")
        return
    _update_settings(verbose=value)


def ensure_defaults() -> None:
    """Write default values for any keys missing from settings.json."""
    data = _read_settings()
    missing = {k: v for k, v in _DEFAULTS.items() if k not in data}
    if missing or not os.path.exists(_SETTINGS_FILE):
        _update_settings(**missing)
