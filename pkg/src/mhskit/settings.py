"""
Settings Module

Default options for the float-mode probes, the CLI and the quotient machinery.
"""

import logging
import os
from typing import Any, Dict

logger = logging.getLogger(__name__)

DEFAULT_OPTIONS: Dict[str, Any] = {
    'divergence_threshold': 10,   # top-row sup / bottom-row sup
    'min_ladder_rows': 3,
    'significant_digits': 12,
    'height_factor': 10,          # probe top height = factor * strip floor
    'workers': 1,
    'sample_budget': 400,
    'log_level': 'WARNING',
}

_ENVIRONMENT = {
    'MHSKIT_WORKERS': ('workers', int),
    'MHSKIT_LOG_LEVEL': ('log_level', str),
}


def _from_environment() -> Dict[str, Any]:
    values = {}
    for variable, (key, cast) in _ENVIRONMENT.items():
        raw = os.environ.get(variable)
        if raw is None:
            continue
        try:
            values[key] = cast(raw)
        except ValueError:
            logger.warning("Ignoring %s=%r: not a valid %s", variable, raw, cast.__name__)
    return values


def get_options(**overrides: Any) -> Dict[str, Any]:
    """
    Merge the defaults, the environment and explicit overrides (in that order).

    Args:
        **overrides: Options that win over defaults and environment; None values are ignored

    Returns:
        A fresh options dictionary
    """
    unknown = set(overrides) - set(DEFAULT_OPTIONS)
    if unknown:
        raise KeyError(f"Unknown options: {sorted(unknown)}")
    options = {**DEFAULT_OPTIONS, **_from_environment()}
    options.update({key: value for key, value in overrides.items() if value is not None})
    return options
