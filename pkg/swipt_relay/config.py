import logging.config
import re
from pathlib import Path
from typing import Any, Dict

from swipt_relay.exceptions import ArgumentError, OutputError

LOGGING_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "default": {
            "class": "logging.StreamHandler",
            "formatter": "default",
            "stream": "ext://sys.stderr",
        }
    },
    "formatters": {
        "default": {
            "format": "%(levelname)s [%(asctime)s] %(name)s - %(message)s",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        }
    },
    "loggers": {
        "": {
            "handlers": ["default"],
            "level": "INFO",
        },
        "matplotlib": {
            "handlers": ["default"],
            "level": "WARNING",
            "propagate": False,  # Prevent propagation to root logger
        },
    },
}


def setup_logging(level: str = "info"):
    config = dict(LOGGING_CONFIG)
    config["loggers"] = dict(LOGGING_CONFIG["loggers"])
    config["loggers"][""] = {"handlers": ["default"], "level": level.upper()}
    logging.config.dictConfig(config)


# Keys accepted in a --config file; values are handed to click unchanged.
CONFIG_KEYS = {
    "snr_db",
    "eta",
    "lambda0",
    "lambda1",
    "lambda2",
    "mean_gain0",
    "mean_gain1",
    "mean_gain2",
    "rth",
    "schemes",
    "modes",
    "metrics",
    "trials",
    "seed",
    "workers",
    "quad",
    "out",
    "plot",
    "preset",
}

_LINE = re.compile(r"^\s*([A-Za-z0-9_\-]+)\s*=\s*(.*?)\s*$")


def load_config_file(path: str | Path) -> Dict[str, Any]:
    """Parse a flat ``key = value`` configuration file.

    Blank lines and lines starting with ``#`` are ignored. Keys may use dashes
    or underscores and are normalised to the underscore form used by click
    parameter names.

    Raises:
        OutputError: If the file cannot be read
        ArgumentError: On malformed lines or unknown keys
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Cannot read config file {path}: {e}") from e

    values: Dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _LINE.match(line)
        if not match:
            raise ArgumentError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key = match.group(1).replace("-", "_").lower()
        if key not in CONFIG_KEYS:
            raise ArgumentError(
                f"{path}:{lineno}: unknown key '{key}'. Known keys: {sorted(CONFIG_KEYS)}"
            )
        values[key] = match.group(2)

    return values
