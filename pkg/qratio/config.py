"""Run-wide defaults and the optional `qratio_config.json` file that overrides them.

Keys in the JSON file are CamelCase, e.g.

    {"PrecisionBits": 256, "SampleBoxRatio": "8", "SampleDenominator": 64, "Workers": 0}

A `Workers` value of 0 means "one worker per physical core".
"""
from __future__ import annotations

__all__ = [
    "DEFAULT_PRECISION_BITS",
    "DEFAULT_SAMPLE_BOX_RATIO",
    "DEFAULT_SAMPLE_DENOMINATOR",
    "DEFAULT_CONFIG_NAME",
    "QRatioConfig",
    "load_config",
    "resolve_workers",
]

import json
import logging
import os
import typing as tp
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from .exceptions import BadParams

try:
    import psutil
except ImportError:
    psutil = None

_LOGGER = logging.getLogger("qratio")

DEFAULT_PRECISION_BITS = 128
DEFAULT_SAMPLE_BOX_RATIO = Fraction(8)
DEFAULT_SAMPLE_DENOMINATOR = 64
DEFAULT_CONFIG_NAME = "qratio_config.json"

_CONFIG_KEYS = {
    "PrecisionBits": "precision_bits",
    "SampleBoxRatio": "sample_box_ratio",
    "SampleDenominator": "sample_denominator",
    "Workers": "workers",
}


@dataclass(frozen=True, slots=True)
class QRatioConfig:
    precision_bits: int = DEFAULT_PRECISION_BITS
    sample_box_ratio: Fraction = DEFAULT_SAMPLE_BOX_RATIO
    sample_denominator: int = DEFAULT_SAMPLE_DENOMINATOR
    workers: int = 1

    def __post_init__(self):
        if self.precision_bits < 8:
            raise BadParams(f"PrecisionBits must be at least 8, not {self.precision_bits}.")
        if Fraction(self.sample_box_ratio) <= 1:
            raise BadParams(f"SampleBoxRatio must exceed 1, not {self.sample_box_ratio}.")
        if self.sample_denominator < 1:
            raise BadParams(f"SampleDenominator must be positive, not {self.sample_denominator}.")
        if self.workers < 0:
            raise BadParams(f"Workers must be non-negative, not {self.workers}.")

    def with_overrides(self, **overrides: tp.Any) -> QRatioConfig:
        """Return a copy with every non-`None` keyword applied (used for command line flags)."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_config(config_path: Path | str | None = None) -> QRatioConfig:
    """Read `config_path`, or `qratio_config.json` in the working directory if it exists, or fall back to defaults."""
    if config_path is None:
        config_path = Path(os.getcwd()) / DEFAULT_CONFIG_NAME
        if not config_path.is_file():
            return QRatioConfig()
    config_path = Path(config_path)

    try:
        with config_path.open("r", encoding="utf-8") as f:
            raw = json.load(f)
    except FileNotFoundError:
        raise BadParams(f"Config file does not exist: {config_path}")
    except json.JSONDecodeError as ex:
        _LOGGER.error(ex)
        raise BadParams(f"Could not interpret config file '{config_path}'. (See log for full JSON error.)")

    if not isinstance(raw, dict):
        raise BadParams(f"Config file '{config_path}' must contain a JSON object.")
    unknown = set(raw) - set(_CONFIG_KEYS)
    if unknown:
        raise BadParams(f"Unknown config keys in '{config_path}': {sorted(unknown)}")

    kwargs = {_CONFIG_KEYS[key]: value for key, value in raw.items()}
    if "sample_box_ratio" in kwargs:
        kwargs["sample_box_ratio"] = Fraction(str(kwargs["sample_box_ratio"]))
    _LOGGER.debug(f"Loaded config from {config_path}: {kwargs}")
    return QRatioConfig(**kwargs)


def resolve_workers(workers: int) -> int:
    """Turn a configured worker count into a concrete one (0 means physical core count)."""
    if workers > 0:
        return workers
    count = None
    if psutil is not None:
        count = psutil.cpu_count(logical=False)
    if not count:
        count = os.cpu_count() or 1
    return count
