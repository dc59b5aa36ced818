"""Configuration management module for hbk."""

from .manager import DEFAULT_CONFIG_PATH, DEFAULTS, ConfigManager
from .templates import DEFAULT_CONFIG_TEMPLATE

__all__ = [
    "ConfigManager",
    "DEFAULTS",
    "DEFAULT_CONFIG_PATH",
    "DEFAULT_CONFIG_TEMPLATE",
]
